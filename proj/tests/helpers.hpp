#pragma once
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "builders.hpp"
#include "constructions.hpp"
#include "format.hpp"
#include "ideals.hpp"
#include "kgraph.hpp"

namespace kgtest {

using namespace kg;

// theta for the 2x2 single-vertex 2-graph that swaps the two color-1 loops
// against g1 and fixes everything against g2.
inline KGraph fswap22() {
  return two_graph_from_bijection(2, 2, [](int i, int j) -> std::pair<int, int> {
    if (j == 2) return {i, j};
    return {i == 1 ? 2 : 1, j};
  });
}

inline std::string twist33_labels_text() {
  return "group Z3xZ3\nlabel f3 (1,0)\nlabel g3 (0,1)\n";
}

inline KGraph skew33() {
  KGraph base = twisted33();
  auto [grp, lab] = parse_labels(base, twist33_labels_text());
  return skew_product(base, lab, grp);
}

// Named fixtures with at most 12 vertices; every analysis suite sweeps them.
inline std::vector<std::pair<std::string, KGraph>> fixture_corpus() {
  std::vector<std::pair<std::string, KGraph>> out;
  out.emplace_back("b1", bouquet(1));
  out.emplace_back("b2", bouquet(2));
  out.emplace_back("b3", bouquet(3));
  for (int n = 1; n <= 4; ++n)
    out.emplace_back("chain" + std::to_string(n), loop_chain(n));
  out.emplace_back("twist33", twisted33());
  out.emplace_back("fswap22", fswap22());
  out.emplace_back("chain2xchain2", cartesian_product(loop_chain(2), loop_chain(2)));
  out.emplace_back("chain2xchain3", cartesian_product(loop_chain(2), loop_chain(3)));
  out.emplace_back("chain3xchain3", cartesian_product(loop_chain(3), loop_chain(3)));
  out.emplace_back("b2xchain3", cartesian_product(bouquet(2), loop_chain(3)));
  out.emplace_back("skew33", skew33());
  out.emplace_back("cube222",
                   cartesian_product(cartesian_product(loop_chain(2), loop_chain(2)), loop_chain(2)));
  return out;
}

// Random valid 1-graph: every vertex gets an edge at its range first, then
// extra edges fill up to the edge budget.
inline KGraph random_1graph(std::mt19937& rng, int max_v = 6, int max_e = 10) {
  int n = 1 + (int)(rng() % max_v);
  Skeleton sk(1);
  for (int i = 0; i < n; ++i) sk.add_vertex(std::to_string(i));
  int edges = 0;
  for (int i = 0; i < n; ++i)
    sk.add_edge("e" + std::to_string(edges++), 1, std::to_string(i),
                std::to_string(rng() % n));
  int extra = (int)(rng() % (max_e - n + 1));
  for (int t = 0; t < extra; ++t)
    sk.add_edge("e" + std::to_string(edges++), 1, std::to_string(rng() % n),
                std::to_string(rng() % n));
  KGraph g(std::move(sk), RuleSet{});
  auto rep = g.validate();
  if (!rep.ok()) fail(Errc::internal, "random 1-graph invalid: " + rep.str());
  return g;
}

// Random composable word from a random start vertex.
inline Morphism random_path(std::mt19937& rng, const KGraph& g, int len) {
  int v = (int)(rng() % g.vertex_count());
  Morphism m{v, {}};
  int cur = v;
  for (int t = 0; t < len; ++t) {
    std::vector<int> options;
    for (int c = 1; c <= g.rank(); ++c)
      for (int e : g.skeleton().edges_at(cur, c, End::range)) options.push_back(e);
    int e = options[rng() % options.size()];
    m.word.push_back(e);
    cur = g.skeleton().edge(e).source;
  }
  return m;
}

// One legal square application at a random admissible position, if any.
inline bool random_square_move(std::mt19937& rng, const KGraph& g, Morphism& m) {
  std::vector<size_t> spots;
  for (size_t t = 0; t + 1 < m.word.size(); ++t)
    if (g.skeleton().edge(m.word[t]).color != g.skeleton().edge(m.word[t + 1]).color)
      spots.push_back(t);
  if (spots.empty()) return false;
  size_t t = spots[rng() % spots.size()];
  int x = m.word[t], y = m.word[t + 1];
  auto moved = g.skeleton().edge(x).color < g.skeleton().edge(y).color ? g.rules().descend(x, y)
                                                                       : g.rules().ascend(x, y);
  m.word[t] = moved->first;
  m.word[t + 1] = moved->second;
  return true;
}

// Right-to-left rewriting strategy; on a coherent presentation it must agree
// with the library's left-to-right normal form.
inline Morphism normal_form_rightmost(const KGraph& g, const Morphism& m) {
  Morphism r = m;
  auto& w = r.word;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int t = (int)w.size() - 2; t >= 0; --t) {
      if (g.skeleton().edge(w[t]).color > g.skeleton().edge(w[t + 1]).color) {
        auto asc = g.rules().ascend(w[t], w[t + 1]);
        w[t] = asc->first;
        w[t + 1] = asc->second;
        changed = true;
      }
    }
  }
  return r;
}

inline Bits set_of(const KGraph& g, std::initializer_list<const char*> ids) {
  std::vector<std::string> v;
  for (const char* s : ids) v.emplace_back(s);
  return vertex_set(g, v);
}

inline std::vector<std::string> names_of(const KGraph& g, const Bits& b) {
  return vertex_names(g, b);
}

inline Degree random_degree_le(std::mt19937& rng, const Degree& d) {
  Degree m(d.rank());
  for (int c = 1; c <= d.rank(); ++c) m.bump(c, (int)(rng() % (d.count(c) + 1)));
  return m;
}

}  // namespace kgtest
