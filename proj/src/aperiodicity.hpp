#pragma once
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bits.hpp"
#include "degree.hpp"
#include "kgraph.hpp"
#include "morphism.hpp"

namespace kg {

struct LoopSearch {
  std::vector<Morphism> loops;
  bool truncated = false;
};

// Simple loops based at v (no repeated vertex before closing). 1-graphs only.
LoopSearch simple_loops_at(const KGraph& g, int v, int cap = 10000);

struct ConditionResult {
  bool holds = false;
  std::optional<Morphism> witness_loop;  // entrance-free loop / the lone loop
  std::optional<int> witness_vertex;
};

// Condition (L): every simple loop passes a vertex with at least two edges
// of its color at the range. For 1-graphs this decides aperiodicity.
ConditionResult condition_L(const KGraph& g);
// Condition (K): every vertex bases zero or at least two simple loops.
// For 1-graphs this decides strong aperiodicity.
ConditionResult condition_K(const KGraph& g);

// Two color-1 loops and two color-2 loops at one vertex satisfying
//   b2·a1 = a1·b2,  b2·a2 = a2·b2,  b1·a1 = a2·b1,  b1·a2 = a1·b1.
struct Quartet {
  Morphism alpha1, alpha2, beta1, beta2;
  int a = 0, b = 0;  // degrees a·e1 and b·e2
  int base = -1;
};

// First quartet at u in deterministic order, scanning a and b upwards.
std::optional<Quartet> find_quartet(const KGraph& g, int u, int a_max = 2, int b_max = 2);

// A path from v refuting local periodicity for the pair (m, n): its two
// aligned segments of degree d - (m v n) differ. Searches degrees up to
// `bound`; nullopt means "no witness up to the bound", never "periodic".
std::optional<Morphism> lp_witness(const KGraph& g, int v, const Degree& m, const Degree& n,
                                   const Degree& bound);

enum class Periodicity { aperiodic, periodic, unknown };

struct SweepBounds {
  Degree pair_box;    // pairs m != n range over [0, pair_box]
  Degree search_box;  // witness search runs over [m v n, search_box]
  static SweepBounds defaults(int rank) {
    return {Degree::constant(rank, 2), Degree::constant(rank, 4)};
  }
};

struct Verdict {
  Periodicity status = Periodicity::unknown;
  bool exact = false;  // certified both ways, not a bounded sweep
  std::string method;
  std::string note;
  std::optional<Morphism> witness_loop;
  std::optional<int> witness_vertex;
  std::optional<Quartet> quartet;
  std::optional<std::pair<Degree, Degree>> failing_pair;
  std::optional<SweepBounds> bounds;
};

struct AperiodicityOptions {
  SweepBounds bounds;
  int quartet_a_max = 2;
  int quartet_b_max = 2;
  // Combine factor verdicts when the graph carries product provenance.
  bool use_factors = true;
  explicit AperiodicityOptions(int rank) : bounds(SweepBounds::defaults(rank)) {}
};

Verdict aperiodic_status(const KGraph& g, const AperiodicityOptions& opts);
inline Verdict aperiodic_status(const KGraph& g) {
  return aperiodic_status(g, AperiodicityOptions(g.rank()));
}

struct QuotientVerdict {
  Bits h;
  Verdict verdict;
};

struct StrongVerdict {
  Verdict overall;
  std::vector<QuotientVerdict> per_quotient;  // empty when a fast path decided
};

StrongVerdict strong_aperiodic_status(const KGraph& g, const AperiodicityOptions& opts);
inline StrongVerdict strong_aperiodic_status(const KGraph& g) {
  return strong_aperiodic_status(g, AperiodicityOptions(g.rank()));
}

}  // namespace kg
