#pragma once
#include <string>
#include <utility>

#include "constructions.hpp"
#include "kgraph.hpp"

namespace kg {

// Line-oriented presentation format, '#' starts a comment:
//   kgraph k=<int>
//   vertex <id>
//   edge <id> color=<int> range=<vid> source=<vid>
//   square <e1> <e2> = <e3> <e4>
// Either side of a square may list the lower color first; the loader
// normalizes the orientation. The result is unvalidated.
KGraph parse_kg(const std::string& text);

// Normalized emission: vertices, edges and squares sorted by id, squares
// with the ascending side first. emit -> parse -> emit is the identity.
std::string emit_kg(const KGraph& g);

// Label file for skew products:
//   group Z<n1>xZ<n2>...
//   label <edge> (<g1>,<g2>,...)
// Unlisted edges carry the zero element.
std::pair<GroupSpec, Labeling> parse_labels(const KGraph& g, const std::string& text);

}  // namespace kg
