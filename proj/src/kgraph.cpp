#include "kgraph.hpp"

#include <algorithm>
#include <array>
#include <deque>

namespace kg {

ValidationReport KGraph::validate() {
  validated_ = false;
  ValidationReport rep = sk_.validate();
  if (!rep.ok()) return rep;
  rep = rules_.validate(sk_);
  if (!rep.ok()) return rep;
  if (rank() >= 3) {
    rep = validate_cubes();
    if (!rep.ok()) return rep;
  }

  // Reachability: from v follow edges range -> source.
  int n = sk_.vertex_count();
  reach_.assign(n, Bits(n));
  for (int v = 0; v < n; ++v) {
    Bits& r = reach_[v];
    std::deque<int> q{v};
    r.set(v);
    while (!q.empty()) {
      int cur = q.front();
      q.pop_front();
      for (int c = 1; c <= rank(); ++c)
        for (int e : sk_.edges_at(cur, c, End::range)) {
          int s = sk_.edge(e).source;
          if (!r.test(s)) {
            r.set(s);
            q.push_back(s);
          }
        }
    }
  }
  validated_ = true;
  return rep;
}

ValidationReport KGraph::validate_cubes() const {
  ValidationReport rep;
  if (rank() < 3) return rep;

  // Rewrite the descending tri-colored word around the cube in the two
  // possible orders; both must land on the same ascending word.
  auto swap_desc = [&](std::array<int, 3>& w, int pos, bool& ok) {
    auto asc = rules_.ascend(w[pos], w[pos + 1]);
    if (!asc) {
      ok = false;
      return;
    }
    w[pos] = asc->first;
    w[pos + 1] = asc->second;
  };

  for (int z = 0; z < sk_.edge_count(); ++z) {
    const Edge& ez = sk_.edge(z);
    for (int cy = 1; cy < ez.color; ++cy)
      for (int y : sk_.edges_at(ez.source, cy, End::range)) {
        const Edge& ey = sk_.edge(y);
        for (int cx = 1; cx < ey.color; ++cx)
          for (int x : sk_.edges_at(ey.source, cx, End::range)) {
            std::array<int, 3> wa{z, y, x}, wb{z, y, x};
            bool ok = true;
            swap_desc(wa, 0, ok);
            swap_desc(wa, 1, ok);
            swap_desc(wa, 0, ok);
            swap_desc(wb, 1, ok);
            swap_desc(wb, 0, ok);
            swap_desc(wb, 1, ok);
            if (!ok) {
              rep.add("CubeIncoherent", "missing square while rewriting " + ez.id + "·" +
                                            ey.id + "·" + sk_.edge(x).id);
              continue;
            }
            if (wa != wb)
              rep.add("CubeIncoherent",
                      "triple " + ez.id + "·" + ey.id + "·" + sk_.edge(x).id +
                          " rewrites to two different words");
          }
      }
  }
  return rep;
}

bool KGraph::le(int v, int w) const {
  require_validated();
  return reach_[v].test(w);
}

const Bits& KGraph::up_set(int v) const {
  require_validated();
  return reach_[v];
}

Morphism KGraph::identity(int v) const {
  if (v < 0 || v >= sk_.vertex_count()) fail(Errc::unknown_vertex, "vertex index out of range");
  return Morphism{v, {}};
}

Morphism KGraph::make(int range, std::vector<int> word) const {
  if (range < 0 || range >= sk_.vertex_count())
    fail(Errc::unknown_vertex, "vertex index out of range");
  int cur = range;
  for (size_t i = 0; i < word.size(); ++i) {
    int e = word[i];
    if (e < 0 || e >= sk_.edge_count()) fail(Errc::unknown_edge, "edge index out of range");
    if (sk_.edge(e).range != cur)
      fail(Errc::not_composable,
           "edge '" + sk_.edge(e).id + "' does not compose at position " + std::to_string(i));
    cur = sk_.edge(e).source;
  }
  return Morphism{range, std::move(word)};
}

Morphism KGraph::path(const std::vector<std::string>& edge_ids) const {
  if (edge_ids.empty()) fail(Errc::bad_argument, "empty path needs a vertex, not an edge list");
  std::vector<int> word;
  word.reserve(edge_ids.size());
  for (const auto& id : edge_ids) word.push_back(sk_.need_edge(id));
  int range = sk_.edge(word[0]).range;
  return make(range, std::move(word));
}

Degree KGraph::degree_of(const Morphism& m) const {
  Degree d(rank());
  for (int e : m.word) d.bump(sk_.edge(e).color, 1);
  return d;
}

int KGraph::source_of(const Morphism& m) const {
  return m.word.empty() ? m.range : sk_.edge(m.word.back()).source;
}

Morphism KGraph::normal_form(const Morphism& m) const {
  require_validated();
  Morphism r = m;
  auto& w = r.word;
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t t = 0; t + 1 < w.size(); ++t) {
      if (sk_.edge(w[t]).color > sk_.edge(w[t + 1]).color) {
        auto asc = rules_.ascend(w[t], w[t + 1]);
        if (!asc) fail(Errc::internal, "square missing on a validated k-graph");
        w[t] = asc->first;
        w[t + 1] = asc->second;
        changed = true;
      }
    }
  }
  return r;
}

bool KGraph::morphisms_equal(const Morphism& p, const Morphism& q) const {
  if (p.range != q.range) return false;
  return normal_form(p).word == normal_form(q).word;
}

Morphism KGraph::compose(const Morphism& p, const Morphism& q) const {
  if (source_of(p) != q.range)
    fail(Errc::not_composable, "source of the first factor is not the range of the second");
  Morphism r = p;
  r.word.insert(r.word.end(), q.word.begin(), q.word.end());
  return r;
}

std::pair<Morphism, Morphism> KGraph::split(const Morphism& m, const Degree& at) const {
  require_validated();
  check_degree_rank(at);
  Degree d = degree_of(m);
  if (!Degree(rank()).le(at) || !at.le(d))
    fail(Errc::degree_out_of_range, "split point outside [0, d(path)]");

  std::vector<int> w = m.word;
  std::vector<int> prefix;
  for (int color = 1; color <= rank(); ++color) {
    for (int t = 0; t < at.count(color); ++t) {
      size_t pos = 0;
      while (sk_.edge(w[pos]).color != color) ++pos;
      // Bubble the edge to the front through squares.
      for (size_t j = pos; j > 0; --j) {
        int x = w[j - 1], e = w[j];
        auto moved = sk_.edge(x).color < color ? rules_.descend(x, e) : rules_.ascend(x, e);
        if (!moved) fail(Errc::internal, "square missing on a validated k-graph");
        w[j - 1] = moved->first;
        w[j] = moved->second;
      }
      prefix.push_back(w.front());
      w.erase(w.begin());
    }
  }
  Morphism head{m.range, std::move(prefix)};
  Morphism rest{source_of(head), std::move(w)};
  return {std::move(head), std::move(rest)};
}

Morphism KGraph::segment(const Morphism& m, const Degree& from, const Degree& to) const {
  check_degree_rank(from);
  check_degree_rank(to);
  if (!from.le(to)) fail(Errc::degree_out_of_range, "segment endpoints out of order");
  auto [head, rest] = split(m, from);
  (void)head;
  return split(rest, to - from).first;
}

int KGraph::vertex_at(const Morphism& m, const Degree& at) const {
  return split(m, at).second.range;
}

bool KGraph::for_each_morphism(int v, const Degree& d,
                               const std::function<bool(const Morphism&)>& fn) const {
  require_validated();
  check_degree_rank(d);
  if (!Degree(rank()).le(d)) fail(Errc::bad_argument, "degree has a negative coordinate");
  if (v < 0 || v >= sk_.vertex_count()) fail(Errc::unknown_vertex, "vertex index out of range");
  Morphism m{v, {}};
  // DFS over words with ascending colors; each such word is its own normal
  // form, so morphisms come out exactly once.
  std::function<bool(int, int, int)> rec = [&](int cur, int color, int left) -> bool {
    while (color <= rank() && left == 0) {
      ++color;
      if (color <= rank()) left = d.count(color);
    }
    if (color > rank()) return fn(m);
    for (int e : sk_.edges_at(cur, color, End::range)) {
      m.word.push_back(e);
      bool go = rec(sk_.edge(e).source, color, left - 1);
      m.word.pop_back();
      if (!go) return false;
    }
    return true;
  };
  return rec(v, 1, d.count(1));
}

std::vector<Morphism> KGraph::morphisms_from(int v, const Degree& d) const {
  std::vector<Morphism> out;
  for_each_morphism(v, d, [&](const Morphism& m) {
    out.push_back(m);
    return true;
  });
  return out;
}

}  // namespace kg
