#pragma once
#include <string>

#include "aperiodicity.hpp"
#include "ideals.hpp"
#include "kgraph.hpp"
#include "tails.hpp"

namespace kg {

// DOT drawing of the skeleton: edges run source -> range, color 1 solid,
// color 2 dashed, further colors dotted then bold.
std::string export_dot(const KGraph& g);
// Hasse diagram of the lattice of saturated hereditary sets.
std::string export_dot(const KGraph& g, const SatHerLattice& lat);
// Hasse diagram of the specialization order of a tail space.
std::string export_dot(const TailSpace& t);

std::string export_json(const KGraph& g);
std::string export_json(const KGraph& g, const SatHerLattice& lat);
std::string export_json(const TailSpace& t, bool with_report = true);
std::string export_json(const KGraph& g, const Verdict& v);
std::string export_json(const KGraph& g, const StrongVerdict& v);
std::string report_json(const ValidationReport& rep);

std::string morphism_str(const KGraph& g, const Morphism& m);

}  // namespace kg
