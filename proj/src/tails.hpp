#pragma once
#include <optional>
#include <string>
#include <vector>

#include "bits.hpp"
#include "ideals.hpp"
#include "kgraph.hpp"
#include "morphism.hpp"

namespace kg {

// Per-condition diagnostics for the maximal-tail test:
// (a) every two members have a common <=-upper bound in the set,
// (b) every member extends one step inside the set in every color,
// (c) the set contains every <=-predecessor of each member.
struct TailCheck {
  bool nonempty = false;
  bool directed = false;       // (a)
  bool extendable = false;     // (b)
  bool ancestor_closed = false;  // (c)
  std::string detail;
  bool ok() const { return nonempty && directed && extendable && ancestor_closed; }
};

TailCheck check_maximal_tail(const KGraph& g, const Bits& gamma);

enum class TailMethod {
  direct,      // filter all nonempty vertex subsets (small graphs)
  complement,  // complements of proper saturated hereditary sets, filtered by (a)
  both,        // run both, insist they agree
};

struct TailCaps {
  int direct_max_vertices = 12;
};

std::vector<Bits> maximal_tails(const KGraph& g, TailMethod method = TailMethod::complement,
                                const TailCaps& caps = {});

struct SpectralReport {
  int points = 0;
  int closed_sets = 0;
  bool closure_of_empty_is_empty = false;
  bool closure_extensive = false;
  bool closure_idempotent = false;
  bool closure_additive = false;
  bool t0 = false;
  bool sober = false;
  bool basis_generates = false;  // the sets S(v) are a base of the closure topology
  std::string detail;
  bool kuratowski() const {
    return closure_of_empty_is_empty && closure_extensive && closure_idempotent &&
           closure_additive;
  }
  // Finite spaces: compact-open base is automatic, so spectral reduces to
  // T0 + sober (with the closure genuinely a topology).
  bool spectral() const { return kuratowski() && t0 && sober && basis_generates; }
};

// Finite T0 space of maximal tails with the closure
//   cl(S) = { delta : delta is contained in the union of the members of S }.
// Points are sorted by (size, id-lexicographic vertex list).
class TailSpace {
 public:
  static TailSpace of(const KGraph& g, TailMethod method = TailMethod::complement,
                      const TailCaps& caps = {});
  // A synthetic space from explicit point sets over an abstract universe;
  // used to build reference spaces for homeomorphism checks.
  static TailSpace from_sets(std::vector<Bits> points, std::vector<std::string> names);
  // The product of chains with lengths lens[i], as a tail-space surrogate:
  // points are the down-sets of single cells, specialization is the grid
  // order. Its topology is the product of right-order chain topologies.
  static TailSpace product_of_chains(const std::vector<int>& lens);

  int size() const { return (int)points_.size(); }
  const Bits& point(int i) const { return points_[i]; }
  std::vector<std::string> point_names(int i) const;

  std::vector<int> closure(const std::vector<int>& pts) const;
  std::vector<int> basis_open(const std::string& vertex_id) const;  // S(v)
  std::vector<int> basis_open_index(int vertex) const;

  // Specialization preorder: p lies in the closure of q.
  bool leq(int p, int q) const { return points_[p].subset_of(points_[q]); }
  std::vector<std::pair<int, int>> hasse() const;

  SpectralReport report() const;
  std::vector<Bits> closed_family() const;

 private:
  std::vector<Bits> points_;
  std::vector<std::string> universe_names_;
};

// Finite T0 spaces are homeomorphic exactly when their specialization
// posets are isomorphic.
bool homeomorphic(const TailSpace& x, const TailSpace& y);

// A path of everywhere-positive degree from v staying inside the tail;
// degree (1,...,1) always suffices.
Morphism positive_degree_step(const KGraph& g, const Bits& chi, int v);

}  // namespace kg
