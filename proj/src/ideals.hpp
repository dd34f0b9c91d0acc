#pragma once
#include <string>
#include <vector>

#include "bits.hpp"
#include "kgraph.hpp"

namespace kg {

// Family of saturated hereditary vertex sets, ordered by inclusion; carries
// the covering relation for Hasse-diagram export. Sets are sorted by
// (size, id-lexicographic members).
struct SatHerLattice {
  std::vector<Bits> sets;
  std::vector<std::pair<int, int>> hasse;  // (lower, upper) covers
};

enum class LatticeMethod { brute, next_closure, both };

struct IdealCaps {
  // Brute force filters every subset; 2^16 subsets by default.
  int brute_max_vertices = 16;
};

Bits vertex_set(const KGraph& g, const std::vector<std::string>& ids);
std::vector<std::string> vertex_names(const KGraph& g, const Bits& s);

Bits hereditary_closure(const KGraph& g, const Bits& s);
bool is_hereditary(const KGraph& g, const Bits& s);
bool is_saturated(const KGraph& g, const Bits& s);
Bits saturate(const KGraph& g, const Bits& s);

// Closure operator whose fixed points are exactly the saturated hereditary
// sets (on a validated graph).
Bits sat_her_closure(const KGraph& g, const Bits& s);

SatHerLattice sat_her_lattice(const KGraph& g, LatticeMethod method = LatticeMethod::next_closure,
                              const IdealCaps& caps = {});

// The k-graph on the vertices outside H with the edges whose source
// survives. H must be saturated hereditary and proper.
KGraph quotient(const KGraph& g, const Bits& h);

// A vertex z with v <= z and y <= z; defined whenever y lies in the
// saturation of {x : v <= x}. Returns the least witness in id order.
int common_upper_bound(const KGraph& g, int v, int y);

}  // namespace kg
