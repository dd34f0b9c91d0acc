#include "ideals.hpp"

#include <algorithm>

namespace kg {

Bits vertex_set(const KGraph& g, const std::vector<std::string>& ids) {
  Bits s(g.vertex_count());
  for (const auto& id : ids) s.set(g.skeleton().need_vertex(id));
  return s;
}

std::vector<std::string> vertex_names(const KGraph& g, const Bits& s) {
  std::vector<std::string> out;
  for (int v : s.members()) out.push_back(g.skeleton().vertex_id(v));
  std::sort(out.begin(), out.end());
  return out;
}

Bits hereditary_closure(const KGraph& g, const Bits& s) {
  g.require_validated();
  Bits out = s;
  for (int v : s.members()) out |= g.up_set(v);
  return out;
}

bool is_hereditary(const KGraph& g, const Bits& s) {
  g.require_validated();
  for (int v : s.members())
    if (!g.up_set(v).subset_of(s)) return false;
  return true;
}

bool is_saturated(const KGraph& g, const Bits& s) {
  g.require_validated();
  const Skeleton& sk = g.skeleton();
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (s.test(v)) continue;
    for (int c = 1; c <= g.rank(); ++c) {
      bool all_in = true;
      for (int e : sk.edges_at(v, c, End::range))
        if (!s.test(sk.edge(e).source)) {
          all_in = false;
          break;
        }
      if (all_in) return false;  // v would be forced into s
    }
  }
  return true;
}

Bits saturate(const KGraph& g, const Bits& s) {
  g.require_validated();
  const Skeleton& sk = g.skeleton();
  Bits out = s;
  bool grew = true;
  while (grew) {
    grew = false;
    for (int v = 0; v < g.vertex_count(); ++v) {
      if (out.test(v)) continue;
      for (int c = 1; c <= g.rank(); ++c) {
        bool all_in = true;
        for (int e : sk.edges_at(v, c, End::range))
          if (!out.test(sk.edge(e).source)) {
            all_in = false;
            break;
          }
        if (all_in) {
          out.set(v);
          grew = true;
          break;
        }
      }
    }
  }
  return out;
}

Bits sat_her_closure(const KGraph& g, const Bits& s) {
  return saturate(g, hereditary_closure(g, s));
}

namespace {

// Canonical presentation order: by size, then id-lexicographic member lists.
void sort_sets(const KGraph& g, std::vector<Bits>& sets) {
  std::sort(sets.begin(), sets.end(), [&](const Bits& a, const Bits& b) {
    if (a.count() != b.count()) return a.count() < b.count();
    return vertex_names(g, a) < vertex_names(g, b);
  });
}

std::vector<Bits> lattice_brute(const KGraph& g, const IdealCaps& caps) {
  int n = g.vertex_count();
  if (n > caps.brute_max_vertices)
    fail(Errc::too_large, "brute-force lattice enumeration is capped at " +
                              std::to_string(caps.brute_max_vertices) + " vertices");
  std::vector<Bits> out;
  for (uint64_t mask = 0; mask < (1ull << n); ++mask) {
    Bits s(n);
    for (int i = 0; i < n; ++i)
      if (mask >> i & 1) s.set(i);
    if (is_hereditary(g, s) && is_saturated(g, s)) out.push_back(s);
  }
  return out;
}

// Ganter's next-closure over the closure operator sat_her_closure, with the
// lectic order taken on vertex indices.
std::vector<Bits> lattice_next_closure(const KGraph& g) {
  int n = g.vertex_count();
  std::vector<Bits> out;
  Bits a = sat_her_closure(g, Bits(n));
  out.push_back(a);
  while (true) {
    bool advanced = false;
    for (int i = n - 1; i >= 0; --i) {
      if (a.test(i)) continue;
      Bits seed(n);
      for (int j = 0; j < i; ++j)
        if (a.test(j)) seed.set(j);
      seed.set(i);
      Bits b = sat_her_closure(g, seed);
      bool canonical = true;
      for (int j = 0; j < i; ++j)
        if (b.test(j) && !a.test(j)) {
          canonical = false;
          break;
        }
      if (canonical) {
        a = b;
        out.push_back(a);
        advanced = true;
        break;
      }
    }
    if (!advanced) break;
  }
  return out;
}

std::vector<std::pair<int, int>> covers(const std::vector<Bits>& sets) {
  std::vector<std::pair<int, int>> h;
  int n = (int)sets.size();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j || !sets[i].subset_of(sets[j]) || sets[i] == sets[j]) continue;
      bool cover = true;
      for (int k = 0; k < n && cover; ++k) {
        if (k == i || k == j) continue;
        if (sets[i].subset_of(sets[k]) && sets[k].subset_of(sets[j]) && !(sets[k] == sets[i]) &&
            !(sets[k] == sets[j]))
          cover = false;
      }
      if (cover) h.push_back({i, j});
    }
  return h;
}

}  // namespace

SatHerLattice sat_her_lattice(const KGraph& g, LatticeMethod method, const IdealCaps& caps) {
  g.require_validated();
  std::vector<Bits> sets;
  switch (method) {
    case LatticeMethod::brute:
      sets = lattice_brute(g, caps);
      break;
    case LatticeMethod::next_closure:
      sets = lattice_next_closure(g);
      break;
    case LatticeMethod::both: {
      sets = lattice_brute(g, caps);
      auto nc = lattice_next_closure(g);
      sort_sets(g, sets);
      sort_sets(g, nc);
      if (sets != nc) fail(Errc::internal, "lattice enumeration methods disagree");
      break;
    }
  }
  sort_sets(g, sets);
  SatHerLattice lat;
  lat.sets = std::move(sets);
  lat.hasse = covers(lat.sets);
  return lat;
}

KGraph quotient(const KGraph& g, const Bits& h) {
  g.require_validated();
  if (h.universe() != g.vertex_count()) fail(Errc::bad_argument, "vertex set universe mismatch");
  if (h.count() == g.vertex_count()) fail(Errc::quotient_empty, "cannot quotient by every vertex");
  if (!is_hereditary(g, h) || !is_saturated(g, h))
    fail(Errc::not_saturated_hereditary, "quotient requires a saturated hereditary set");

  const Skeleton& sk = g.skeleton();
  Skeleton out(g.rank());
  for (int v = 0; v < g.vertex_count(); ++v)
    if (!h.test(v)) out.add_vertex(sk.vertex_id(v));
  std::vector<int> edge_map(sk.edge_count(), -1);
  for (int e = 0; e < sk.edge_count(); ++e) {
    const Edge& ed = sk.edge(e);
    if (h.test(ed.source)) continue;  // range survives by heredity
    edge_map[e] = out.add_edge(ed.id, ed.color, sk.vertex_id(ed.range), sk.vertex_id(ed.source));
  }
  RuleSet rules;
  for (const SquareRule& r : g.rules().rules()) {
    int corner = sk.edge(r.b).source;  // common source of both sides
    if (h.test(corner)) continue;
    rules.add({edge_map[r.a], edge_map[r.b], edge_map[r.b2], edge_map[r.a2]});
  }
  KGraph q(std::move(out), std::move(rules));
  ValidationReport rep = q.validate();
  if (!rep.ok())
    fail(Errc::internal, "quotient by a saturated hereditary set failed validation:\n" + rep.str());
  return q;
}

int common_upper_bound(const KGraph& g, int v, int y) {
  g.require_validated();
  if (v < 0 || v >= g.vertex_count() || y < 0 || y >= g.vertex_count())
    fail(Errc::unknown_vertex, "vertex index out of range");
  Bits closure = sat_her_closure(g, g.up_set(v));
  if (!closure.test(y))
    fail(Errc::bad_argument, "vertex is not in the saturation of the up-set");

  std::vector<int> order(g.vertex_count());
  for (int i = 0; i < g.vertex_count(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return g.skeleton().vertex_id(a) < g.skeleton().vertex_id(b);
  });
  for (int z : order)
    if (g.le(v, z) && g.le(y, z)) return z;
  fail(Errc::no_witness, "no common upper bound found; this should be impossible");
}

}  // namespace kg
