#include "tails.hpp"

#include <algorithm>
#include <map>

namespace kg {

TailCheck check_maximal_tail(const KGraph& g, const Bits& gamma) {
  g.require_validated();
  TailCheck r;
  r.nonempty = !gamma.empty();
  if (!r.nonempty) {
    r.detail = "empty set";
    return r;
  }
  auto members = gamma.members();

  r.directed = true;
  for (size_t i = 0; i < members.size() && r.directed; ++i)
    for (size_t j = i; j < members.size() && r.directed; ++j) {
      bool found = false;
      for (int w : members)
        if (g.le(members[i], w) && g.le(members[j], w)) {
          found = true;
          break;
        }
      if (!found) {
        r.directed = false;
        r.detail = "no common upper bound for '" + g.skeleton().vertex_id(members[i]) +
                   "' and '" + g.skeleton().vertex_id(members[j]) + "'";
      }
    }

  r.extendable = true;
  const Skeleton& sk = g.skeleton();
  for (int v : members) {
    for (int c = 1; c <= g.rank() && r.extendable; ++c) {
      bool found = false;
      for (int e : sk.edges_at(v, c, End::range))
        if (gamma.test(sk.edge(e).source)) {
          found = true;
          break;
        }
      if (!found) {
        r.extendable = false;
        r.detail = "vertex '" + sk.vertex_id(v) + "' has no color-" + std::to_string(c) +
                   " step inside the set";
      }
    }
    if (!r.extendable) break;
  }

  r.ancestor_closed = true;
  for (int v = 0; v < g.vertex_count() && r.ancestor_closed; ++v) {
    if (gamma.test(v)) continue;
    for (int w : members)
      if (g.le(v, w)) {
        r.ancestor_closed = false;
        r.detail = "'" + sk.vertex_id(v) + "' <= '" + sk.vertex_id(w) + "' but only the latter is in the set";
        break;
      }
  }
  return r;
}

namespace {

void sort_tails(const KGraph& g, std::vector<Bits>& tails) {
  std::sort(tails.begin(), tails.end(), [&](const Bits& a, const Bits& b) {
    if (a.count() != b.count()) return a.count() < b.count();
    return vertex_names(g, a) < vertex_names(g, b);
  });
}

std::vector<Bits> tails_direct(const KGraph& g, const TailCaps& caps) {
  int n = g.vertex_count();
  if (n > caps.direct_max_vertices)
    fail(Errc::too_large, "direct tail enumeration is capped at " +
                              std::to_string(caps.direct_max_vertices) + " vertices");
  std::vector<Bits> out;
  for (uint64_t mask = 1; mask < (1ull << n); ++mask) {
    Bits s(n);
    for (int i = 0; i < n; ++i)
      if (mask >> i & 1) s.set(i);
    if (check_maximal_tail(g, s).ok()) out.push_back(s);
  }
  return out;
}

// Complements of proper saturated hereditary sets automatically satisfy the
// extendability and ancestor-closure conditions; only directedness filters.
std::vector<Bits> tails_complement(const KGraph& g) {
  std::vector<Bits> out;
  SatHerLattice lat = sat_her_lattice(g, LatticeMethod::next_closure);
  for (const Bits& h : lat.sets) {
    if (h.count() == g.vertex_count()) continue;
    Bits gamma = h.complement();
    auto members = gamma.members();
    bool directed = true;
    for (size_t i = 0; i < members.size() && directed; ++i)
      for (size_t j = i; j < members.size() && directed; ++j) {
        bool found = false;
        for (int w : members)
          if (g.le(members[i], w) && g.le(members[j], w)) {
            found = true;
            break;
          }
        directed = found;
      }
    if (directed) out.push_back(gamma);
  }
  return out;
}

}  // namespace

std::vector<Bits> maximal_tails(const KGraph& g, TailMethod method, const TailCaps& caps) {
  g.require_validated();
  std::vector<Bits> tails;
  switch (method) {
    case TailMethod::direct:
      tails = tails_direct(g, caps);
      break;
    case TailMethod::complement:
      tails = tails_complement(g);
      break;
    case TailMethod::both: {
      tails = tails_direct(g, caps);
      auto other = tails_complement(g);
      sort_tails(g, tails);
      sort_tails(g, other);
      if (tails != other) fail(Errc::internal, "tail enumeration methods disagree");
      break;
    }
  }
  sort_tails(g, tails);
  return tails;
}

TailSpace TailSpace::of(const KGraph& g, TailMethod method, const TailCaps& caps) {
  TailSpace t;
  t.points_ = maximal_tails(g, method, caps);
  t.universe_names_.reserve(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v)
    t.universe_names_.push_back(g.skeleton().vertex_id(v));
  return t;
}

TailSpace TailSpace::from_sets(std::vector<Bits> points, std::vector<std::string> names) {
  TailSpace t;
  t.points_ = std::move(points);
  t.universe_names_ = std::move(names);
  std::sort(t.points_.begin(), t.points_.end(), [&](const Bits& a, const Bits& b) {
    if (a.count() != b.count()) return a.count() < b.count();
    return a.members() < b.members();
  });
  return t;
}

TailSpace TailSpace::product_of_chains(const std::vector<int>& lens) {
  int cells = 1;
  for (int l : lens) {
    if (l < 1) fail(Errc::bad_argument, "chain lengths must be positive");
    cells *= l;
  }
  auto cell_index = [&](const std::vector<int>& c) {
    int idx = 0;
    for (size_t i = 0; i < lens.size(); ++i) idx = idx * lens[i] + c[i];
    return idx;
  };
  std::vector<std::string> names(cells);
  std::vector<int> cur(lens.size(), 0);
  std::vector<std::vector<int>> all;
  while (true) {
    all.push_back(cur);
    std::string nm;
    for (size_t i = 0; i < cur.size(); ++i) nm += (i ? "." : "") + std::to_string(cur[i]);
    names[cell_index(cur)] = nm;
    int i = (int)lens.size() - 1;
    while (i >= 0 && cur[i] == lens[i] - 1) cur[i--] = 0;
    if (i < 0) break;
    ++cur[i];
  }
  std::vector<Bits> pts;
  for (const auto& top : all) {
    Bits b(cells);
    for (const auto& c : all) {
      bool below = true;
      for (size_t i = 0; i < lens.size(); ++i)
        if (c[i] > top[i]) below = false;
      if (below) b.set(cell_index(c));
    }
    pts.push_back(b);
  }
  return from_sets(std::move(pts), std::move(names));
}

std::vector<std::string> TailSpace::point_names(int i) const {
  std::vector<std::string> out;
  for (int v : points_[i].members()) out.push_back(universe_names_[v]);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> TailSpace::closure(const std::vector<int>& pts) const {
  if (points_.empty()) return {};
  Bits uni(points_[0].universe());
  for (int p : pts) uni |= points_[p];
  std::vector<int> out;
  for (int i = 0; i < size(); ++i)
    if (points_[i].subset_of(uni)) out.push_back(i);
  return out;
}

std::vector<int> TailSpace::basis_open_index(int vertex) const {
  std::vector<int> out;
  for (int i = 0; i < size(); ++i)
    if (points_[i].test(vertex)) out.push_back(i);
  return out;
}

std::vector<int> TailSpace::basis_open(const std::string& vertex_id) const {
  for (size_t v = 0; v < universe_names_.size(); ++v)
    if (universe_names_[v] == vertex_id) return basis_open_index((int)v);
  fail(Errc::unknown_vertex, "unknown vertex '" + vertex_id + "'");
}

std::vector<std::pair<int, int>> TailSpace::hasse() const {
  std::vector<std::pair<int, int>> h;
  for (int i = 0; i < size(); ++i)
    for (int j = 0; j < size(); ++j) {
      if (i == j || !leq(i, j) || (leq(j, i))) continue;
      bool cover = true;
      for (int k = 0; k < size() && cover; ++k) {
        if (k == i || k == j) continue;
        if (leq(i, k) && leq(k, j) && !(leq(k, i)) && !(leq(j, k))) cover = false;
      }
      if (cover) h.push_back({i, j});
    }
  return h;
}

std::vector<Bits> TailSpace::closed_family() const {
  int n = size();
  auto as_bits = [&](const std::vector<int>& idx) {
    Bits b(n);
    for (int i : idx) b.set(i);
    return b;
  };
  std::vector<Bits> closed{as_bits(closure({}))};
  // Saturate the family under "add one point and close"; closure is
  // monotone and extensive, so this reaches every closed set.
  for (size_t t = 0; t < closed.size(); ++t) {
    Bits base = closed[t];
    for (int p = 0; p < n; ++p) {
      if (base.test(p)) continue;
      std::vector<int> pts = base.members();
      pts.push_back(p);
      Bits next = as_bits(closure(pts));
      if (std::find(closed.begin(), closed.end(), next) == closed.end()) closed.push_back(next);
    }
  }
  return closed;
}

SpectralReport TailSpace::report() const {
  SpectralReport r;
  r.points = size();
  int n = size();
  auto as_bits = [&](const std::vector<int>& idx) {
    Bits b(n);
    for (int i : idx) b.set(i);
    return b;
  };

  r.closure_of_empty_is_empty = closure({}).empty();

  r.closure_extensive = true;
  std::vector<Bits> point_closures(n, Bits(n));
  for (int p = 0; p < n; ++p) {
    point_closures[p] = as_bits(closure({p}));
    if (!point_closures[p].test(p)) {
      r.closure_extensive = false;
      r.detail += "closure of a point misses the point; ";
    }
  }

  r.closure_idempotent = true;
  for (int p = 0; p < n; ++p) {
    Bits again = as_bits(closure(point_closures[p].members()));
    if (!(again == point_closures[p])) {
      r.closure_idempotent = false;
      r.detail += "closure not idempotent on a point closure; ";
      break;
    }
  }

  // Additivity over arbitrary unions reduces to: no point is covered by the
  // union of the points that do not individually cover it.
  r.closure_additive = true;
  for (int p = 0; p < n; ++p) {
    Bits uni(points_[p].universe());
    bool any = false;
    for (int q = 0; q < n; ++q)
      if (!points_[p].subset_of(points_[q])) {
        uni |= points_[q];
        any = true;
      }
    if (any && points_[p].subset_of(uni)) {
      r.closure_additive = false;
      r.detail += "closure fails finite additivity at point " + std::to_string(p) + "; ";
      break;
    }
  }

  r.t0 = true;
  for (int p = 0; p < n && r.t0; ++p)
    for (int q = p + 1; q < n; ++q)
      if (point_closures[p] == point_closures[q]) {
        r.t0 = false;
        r.detail += "two points share a closure; ";
        break;
      }

  std::vector<Bits> closed = closed_family();
  r.closed_sets = (int)closed.size();

  // Sober: every irreducible closed set is the closure of exactly one point.
  // In a finite space whose closure is additive, closed sets are down-sets of
  // the specialization order and irreducible means up-directed.
  r.sober = true;
  for (const Bits& c : closed) {
    if (c.empty()) continue;
    auto mem = c.members();
    bool irreducible = true;
    for (size_t i = 0; i < mem.size() && irreducible; ++i)
      for (size_t j = i; j < mem.size() && irreducible; ++j) {
        bool bounded = false;
        for (int z : mem)
          if (leq(mem[i], z) && leq(mem[j], z)) {
            bounded = true;
            break;
          }
        irreducible = bounded;
      }
    if (!irreducible) continue;
    int generic = 0;
    for (int p : mem)
      if (point_closures[p] == c) ++generic;
    if (generic != 1) {
      r.sober = false;
      r.detail += "an irreducible closed set has " + std::to_string(generic) + " generic points; ";
      break;
    }
  }

  // The S(v) family must generate exactly the closure topology: every S(v)
  // is open, and every open set is a union of S(v)'s.
  r.basis_generates = true;
  std::vector<Bits> opens;
  for (const Bits& c : closed) opens.push_back(c.complement());
  std::vector<Bits> basis;
  for (size_t v = 0; v < universe_names_.size(); ++v) basis.push_back(as_bits(basis_open_index((int)v)));
  for (const Bits& b : basis) {
    if (std::find(opens.begin(), opens.end(), b) == opens.end()) {
      r.basis_generates = false;
      r.detail += "a basic set S(v) is not open; ";
      break;
    }
  }
  if (r.basis_generates)
    for (const Bits& u : opens) {
      Bits cover(n);
      for (const Bits& b : basis)
        if (b.subset_of(u)) cover |= b;
      if (!(cover == u)) {
        r.basis_generates = false;
        r.detail += "an open set is not a union of basic sets; ";
        break;
      }
    }
  return r;
}

namespace {

// Order-isomorphism of finite preorders by invariant refinement plus
// backtracking. Sizes here are tiny.
struct PosetIso {
  const TailSpace& a;
  const TailSpace& b;
  int n;
  std::vector<int> map;      // a-point -> b-point
  std::vector<bool> used;

  bool compatible(int i, int bi) const {
    for (int j = 0; j < n; ++j) {
      if (map[j] < 0) continue;
      if (a.leq(i, j) != b.leq(bi, map[j])) return false;
      if (a.leq(j, i) != b.leq(map[j], bi)) return false;
    }
    return true;
  }
  bool rec(int i) {
    if (i == n) return true;
    for (int bi = 0; bi < n; ++bi) {
      if (used[bi] || !compatible(i, bi)) continue;
      map[i] = bi;
      used[bi] = true;
      if (rec(i + 1)) return true;
      map[i] = -1;
      used[bi] = false;
    }
    return false;
  }
};

}  // namespace

bool homeomorphic(const TailSpace& x, const TailSpace& y) {
  if (x.size() != y.size()) return false;
  int n = x.size();
  // Cheap invariant screen: multiset of (down-set size, up-set size).
  auto profile = [n](const TailSpace& t) {
    std::vector<std::pair<int, int>> p;
    for (int i = 0; i < n; ++i) {
      int down = 0, up = 0;
      for (int j = 0; j < n; ++j) {
        if (t.leq(j, i)) ++down;
        if (t.leq(i, j)) ++up;
      }
      p.push_back({down, up});
    }
    std::sort(p.begin(), p.end());
    return p;
  };
  if (profile(x) != profile(y)) return false;
  PosetIso iso{x, y, n, std::vector<int>(n, -1), std::vector<bool>(n, false)};
  return iso.rec(0);
}

Morphism positive_degree_step(const KGraph& g, const Bits& chi, int v) {
  g.require_validated();
  if (!chi.test(v)) fail(Errc::bad_argument, "vertex does not belong to the tail");
  Morphism found;
  bool have = false;
  g.for_each_morphism(v, Degree::ones(g.rank()), [&](const Morphism& m) {
    if (chi.test(g.source_of(m))) {
      found = m;
      have = true;
      return false;
    }
    return true;
  });
  if (!have) fail(Errc::no_witness, "no positive-degree step inside the tail");
  return found;
}

}  // namespace kg
