#pragma once
#include <string>
#include <vector>

#include "kgraph.hpp"

namespace kg {

// Finite abelian group Z_{n1} x ... x Z_{nr}; elements are tuples under
// componentwise addition mod n_i.
struct GroupSpec {
  std::vector<int> moduli;

  static GroupSpec parse(const std::string& text);  // "Z3xZ3"
  int rank() const { return (int)moduli.size(); }
  long long order() const;
  std::vector<int> zero() const { return std::vector<int>(moduli.size(), 0); }
  std::vector<int> add(const std::vector<int>& a, const std::vector<int>& b) const;
  std::vector<std::vector<int>> elements() const;
  std::string str(const std::vector<int>& e) const;  // "0.1"
  std::string name() const;                          // "Z3xZ3"
};

// Edge labeling c: edges -> G, extended to paths by adding along the word.
struct Labeling {
  std::vector<std::vector<int>> value;  // indexed by edge, each of group rank

  static Labeling zero(const KGraph& g, const GroupSpec& grp);
  std::vector<int> of_path(const KGraph& g, const GroupSpec& grp, const Morphism& m) const;
};

// Square consistency of the labeling: both factorizations of every square
// carry the same group element.
ValidationReport validate_functor(const KGraph& g, const Labeling& c, const GroupSpec& grp);

// Product category with componentwise degree; colors of the left factor come
// first. Output is validated and remembers its factors.
KGraph cartesian_product(const KGraph& a, const KGraph& b);

// Vertices Λ^0 x G; an edge (e, g) runs from (s(e), g + c(e)) to (r(e), g).
// Squares are translated copies of the base squares.
KGraph skew_product(const KGraph& g, const Labeling& c, const GroupSpec& grp);

}  // namespace kg
