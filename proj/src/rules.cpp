#include "rules.hpp"

namespace kg {

void RuleSet::build_index() const {
  if (indexed_) return;
  fwd_.clear();
  bwd_.clear();
  for (const SquareRule& r : rules_) {
    fwd_.emplace(key(r.a, r.b), std::make_pair(r.b2, r.a2));
    bwd_.emplace(key(r.b2, r.a2), std::make_pair(r.a, r.b));
  }
  indexed_ = true;
}

std::optional<std::pair<int, int>> RuleSet::descend(int x, int y) const {
  build_index();
  auto it = fwd_.find(key(x, y));
  if (it == fwd_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::pair<int, int>> RuleSet::ascend(int y, int x) const {
  build_index();
  auto it = bwd_.find(key(y, x));
  if (it == bwd_.end()) return std::nullopt;
  return it->second;
}

ValidationReport RuleSet::validate(const Skeleton& sk) const {
  ValidationReport rep;
  auto word = [&](int x, int y) { return sk.edge(x).id + "·" + sk.edge(y).id; };

  std::unordered_map<uint64_t, int> seen_lhs, seen_rhs;
  for (const SquareRule& r : rules_) {
    const Edge& a = sk.edge(r.a);
    const Edge& b = sk.edge(r.b);
    const Edge& b2 = sk.edge(r.b2);
    const Edge& a2 = sk.edge(r.a2);
    if (!(a.color < b.color) || a2.color != a.color || b2.color != b.color) {
      rep.add("EndpointMismatch", "square " + word(r.a, r.b) + " = " + word(r.b2, r.a2) +
                                      " does not pair the same two colors in both orders");
      continue;
    }
    if (a.source != b.range || b2.source != a2.range)
      rep.add("EndpointMismatch",
              "square " + word(r.a, r.b) + " = " + word(r.b2, r.a2) + " has a non-composable side");
    if (a.range != b2.range || b.source != a2.source)
      rep.add("EndpointMismatch", "square " + word(r.a, r.b) + " = " + word(r.b2, r.a2) +
                                      " sides disagree on range or source");
    if (++seen_lhs[key(r.a, r.b)] == 2)
      rep.add("DuplicateSquare", "word " + word(r.a, r.b) + " appears in two squares");
    if (++seen_rhs[key(r.b2, r.a2)] == 2)
      rep.add("DuplicateSquare", "word " + word(r.b2, r.a2) + " is the image of two squares");
  }
  if (!rep.ok()) return rep;

  build_index();
  // Totality: every composable two-colored word must appear on its side.
  for (int mid = 0; mid < sk.vertex_count(); ++mid) {
    for (int ci = 1; ci <= sk.rank(); ++ci) {
      for (int cj = ci + 1; cj <= sk.rank(); ++cj) {
        for (int x : sk.edges_at(mid, ci, End::source))
          for (int y : sk.edges_at(mid, cj, End::range))
            if (!fwd_.count(key(x, y)))
              rep.add("MissingSquare", "no square for word " + word(x, y));
        for (int y : sk.edges_at(mid, cj, End::source))
          for (int x : sk.edges_at(mid, ci, End::range))
            if (!bwd_.count(key(y, x)))
              rep.add("MissingSquare", "no square for word " + word(y, x));
      }
    }
  }
  return rep;
}

}  // namespace kg
