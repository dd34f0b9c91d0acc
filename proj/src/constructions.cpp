#include "constructions.hpp"

#include <algorithm>

namespace kg {

GroupSpec GroupSpec::parse(const std::string& text) {
  GroupSpec g;
  size_t i = 0;
  while (i < text.size()) {
    if (text[i] != 'Z') fail(Errc::parse, "group spec must look like Z3xZ3, got '" + text + "'");
    ++i;
    size_t j = i;
    while (j < text.size() && isdigit((unsigned char)text[j])) ++j;
    if (j == i) fail(Errc::parse, "missing modulus in group spec '" + text + "'");
    int n = std::stoi(text.substr(i, j - i));
    if (n < 1) fail(Errc::parse, "group moduli must be at least 1");
    g.moduli.push_back(n);
    i = j;
    if (i < text.size()) {
      if (text[i] != 'x') fail(Errc::parse, "expected 'x' between factors in '" + text + "'");
      ++i;
    }
  }
  if (g.moduli.empty()) fail(Errc::parse, "empty group spec");
  return g;
}

long long GroupSpec::order() const {
  long long o = 1;
  for (int n : moduli) o *= n;
  return o;
}

std::vector<int> GroupSpec::add(const std::vector<int>& a, const std::vector<int>& b) const {
  std::vector<int> r(moduli.size());
  for (size_t i = 0; i < moduli.size(); ++i) r[i] = ((a[i] + b[i]) % moduli[i] + moduli[i]) % moduli[i];
  return r;
}

std::vector<std::vector<int>> GroupSpec::elements() const {
  if (order() > 100000) fail(Errc::too_large, "group order too large to enumerate");
  std::vector<std::vector<int>> out;
  std::vector<int> cur(moduli.size(), 0);
  while (true) {
    out.push_back(cur);
    int i = (int)moduli.size() - 1;
    while (i >= 0 && cur[i] == moduli[i] - 1) cur[i--] = 0;
    if (i < 0) break;
    ++cur[i];
  }
  return out;
}

std::string GroupSpec::str(const std::vector<int>& e) const {
  std::string s;
  for (size_t i = 0; i < e.size(); ++i) s += (i ? "." : "") + std::to_string(e[i]);
  return s;
}

std::string GroupSpec::name() const {
  std::string s;
  for (size_t i = 0; i < moduli.size(); ++i) s += (i ? "x" : "") + ("Z" + std::to_string(moduli[i]));
  return s;
}

Labeling Labeling::zero(const KGraph& g, const GroupSpec& grp) {
  Labeling l;
  l.value.assign(g.skeleton().edge_count(), grp.zero());
  return l;
}

std::vector<int> Labeling::of_path(const KGraph& g, const GroupSpec& grp,
                                   const Morphism& m) const {
  (void)g;
  std::vector<int> acc = grp.zero();
  for (int e : m.word) acc = grp.add(acc, value[e]);
  return acc;
}

ValidationReport validate_functor(const KGraph& g, const Labeling& c, const GroupSpec& grp) {
  ValidationReport rep;
  if ((int)c.value.size() != g.skeleton().edge_count()) {
    rep.add("InconsistentSquare", "labeling does not cover every edge");
    return rep;
  }
  const Skeleton& sk = g.skeleton();
  for (const SquareRule& r : g.rules().rules()) {
    auto lhs = grp.add(c.value[r.a], c.value[r.b]);
    auto rhs = grp.add(c.value[r.b2], c.value[r.a2]);
    if (lhs != rhs)
      rep.add("InconsistentSquare", "square " + sk.edge(r.a).id + "·" + sk.edge(r.b).id + " = " +
                                        sk.edge(r.b2).id + "·" + sk.edge(r.a2).id +
                                        " carries different labels on its two sides");
  }
  return rep;
}

namespace {

std::string pair_name(const std::string& a, const std::string& b) {
  return "(" + a + "," + b + ")";
}

}  // namespace

KGraph cartesian_product(const KGraph& a, const KGraph& b) {
  a.require_validated();
  b.require_validated();
  const Skeleton& sa = a.skeleton();
  const Skeleton& sb = b.skeleton();
  Skeleton sk(a.rank() + b.rank());

  for (int v = 0; v < sa.vertex_count(); ++v)
    for (int w = 0; w < sb.vertex_count(); ++w)
      sk.add_vertex(pair_name(sa.vertex_id(v), sb.vertex_id(w)));

  // Left edges sweep the right vertices; right edges sweep the left ones and
  // shift color by the left rank.
  std::vector<std::vector<int>> left_edge(sa.edge_count(), std::vector<int>(sb.vertex_count()));
  std::vector<std::vector<int>> right_edge(sa.vertex_count(), std::vector<int>(sb.edge_count()));
  for (int e = 0; e < sa.edge_count(); ++e) {
    const Edge& ed = sa.edge(e);
    for (int w = 0; w < sb.vertex_count(); ++w)
      left_edge[e][w] = sk.add_edge(pair_name(ed.id, sb.vertex_id(w)), ed.color,
                                    pair_name(sa.vertex_id(ed.range), sb.vertex_id(w)),
                                    pair_name(sa.vertex_id(ed.source), sb.vertex_id(w)));
  }
  for (int v = 0; v < sa.vertex_count(); ++v) {
    for (int f = 0; f < sb.edge_count(); ++f) {
      const Edge& fd = sb.edge(f);
      right_edge[v][f] = sk.add_edge(pair_name(sa.vertex_id(v), fd.id), a.rank() + fd.color,
                                     pair_name(sa.vertex_id(v), sb.vertex_id(fd.range)),
                                     pair_name(sa.vertex_id(v), sb.vertex_id(fd.source)));
    }
  }

  RuleSet rules;
  for (const SquareRule& r : a.rules().rules())
    for (int w = 0; w < sb.vertex_count(); ++w)
      rules.add({left_edge[r.a][w], left_edge[r.b][w], left_edge[r.b2][w], left_edge[r.a2][w]});
  for (const SquareRule& r : b.rules().rules())
    for (int v = 0; v < sa.vertex_count(); ++v)
      rules.add({right_edge[v][r.a], right_edge[v][r.b], right_edge[v][r.b2], right_edge[v][r.a2]});
  // Mixed squares: (e, r(f)) · (s(e), f)  =  (r(e), f) · (e, s(f)).
  for (int e = 0; e < sa.edge_count(); ++e) {
    const Edge& ed = sa.edge(e);
    for (int f = 0; f < sb.edge_count(); ++f) {
      const Edge& fd = sb.edge(f);
      rules.add({left_edge[e][fd.range], right_edge[ed.source][f], right_edge[ed.range][f],
                 left_edge[e][fd.source]});
    }
  }

  KGraph out(std::move(sk), std::move(rules));
  ValidationReport rep = out.validate();
  if (!rep.ok()) fail(Errc::internal, "cartesian product failed validation:\n" + rep.str());
  out.set_factors(std::make_shared<KGraph>(a), std::make_shared<KGraph>(b));
  return out;
}

KGraph skew_product(const KGraph& g, const Labeling& c, const GroupSpec& grp) {
  g.require_validated();
  ValidationReport functor = validate_functor(g, c, grp);
  if (!functor.ok()) fail(Errc::bad_argument, "labeling is not a functor:\n" + functor.str());

  const Skeleton& sk = g.skeleton();
  auto elems = grp.elements();
  auto eindex = [&](const std::vector<int>& e) {
    long long idx = 0;
    for (size_t i = 0; i < grp.moduli.size(); ++i) idx = idx * grp.moduli[i] + e[i];
    return (int)idx;
  };

  Skeleton out(g.rank());
  for (int v = 0; v < sk.vertex_count(); ++v)
    for (const auto& e : elems) out.add_vertex(pair_name(sk.vertex_id(v), grp.str(e)));

  std::vector<std::vector<int>> lifted(sk.edge_count(), std::vector<int>(elems.size()));
  for (int e = 0; e < sk.edge_count(); ++e) {
    const Edge& ed = sk.edge(e);
    for (const auto& gv : elems) {
      auto shifted = grp.add(gv, c.value[e]);
      lifted[e][eindex(gv)] =
          out.add_edge(pair_name(ed.id, grp.str(gv)), ed.color,
                       pair_name(sk.vertex_id(ed.range), grp.str(gv)),
                       pair_name(sk.vertex_id(ed.source), grp.str(shifted)));
    }
  }

  RuleSet rules;
  for (const SquareRule& r : g.rules().rules())
    for (const auto& gv : elems) {
      auto after_a = grp.add(gv, c.value[r.a]);
      auto after_b2 = grp.add(gv, c.value[r.b2]);
      rules.add({lifted[r.a][eindex(gv)], lifted[r.b][eindex(after_a)],
                 lifted[r.b2][eindex(gv)], lifted[r.a2][eindex(after_b2)]});
    }

  KGraph result(std::move(out), std::move(rules));
  ValidationReport rep = result.validate();
  if (!rep.ok()) fail(Errc::internal, "skew product failed validation:\n" + rep.str());
  return result;
}

}  // namespace kg
