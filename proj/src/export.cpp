#include "export.hpp"

#include <array>

#include <json.hpp>

namespace kg {

using nlohmann::json;

namespace {

const char* kStyles[] = {"solid", "dashed", "dotted", "bold"};

std::string style_for(int color) { return kStyles[(color - 1) % 4]; }

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

std::string set_label(const std::vector<std::string>& names) {
  std::string s = "{";
  for (size_t i = 0; i < names.size(); ++i) s += (i ? "," : "") + names[i];
  return s + "}";
}

json verdict_json(const KGraph& g, const Verdict& v) {
  json j;
  switch (v.status) {
    case Periodicity::aperiodic:
      j["status"] = "aperiodic";
      break;
    case Periodicity::periodic:
      j["status"] = "periodic";
      break;
    case Periodicity::unknown:
      j["status"] = "unknown";
      break;
  }
  j["exact"] = v.exact;
  j["method"] = v.method;
  j["note"] = v.note;
  json cert = json::object();
  if (v.witness_vertex) cert["vertex"] = g.skeleton().vertex_id(*v.witness_vertex);
  if (v.witness_loop) cert["loop"] = morphism_str(g, *v.witness_loop);
  if (v.quartet) {
    const Quartet& q = *v.quartet;
    cert["quartet"] = {{"base", g.skeleton().vertex_id(q.base)},
                       {"a", q.a},
                       {"b", q.b},
                       {"alpha1", morphism_str(g, q.alpha1)},
                       {"alpha2", morphism_str(g, q.alpha2)},
                       {"beta1", morphism_str(g, q.beta1)},
                       {"beta2", morphism_str(g, q.beta2)}};
  }
  if (v.failing_pair)
    cert["failing_pair"] = {v.failing_pair->first.str(), v.failing_pair->second.str()};
  if (v.bounds) {
    cert["pair_box"] = v.bounds->pair_box.str();
    cert["search_box"] = v.bounds->search_box.str();
  }
  j["certificate"] = cert;
  return j;
}

}  // namespace

std::string morphism_str(const KGraph& g, const Morphism& m) {
  if (m.word.empty()) return "id@" + g.skeleton().vertex_id(m.range);
  std::string s;
  for (size_t i = 0; i < m.word.size(); ++i)
    s += (i ? "," : "") + g.skeleton().edge(m.word[i]).id;
  return s;
}

std::string export_dot(const KGraph& g) {
  const Skeleton& sk = g.skeleton();
  std::string out = "digraph kgraph {\n  rankdir=LR;\n";
  std::vector<std::string> vnames;
  for (int v = 0; v < sk.vertex_count(); ++v) vnames.push_back(sk.vertex_id(v));
  std::sort(vnames.begin(), vnames.end());
  for (const auto& v : vnames) out += "  " + quoted(v) + " [shape=circle];\n";
  std::vector<int> eorder(sk.edge_count());
  for (int e = 0; e < sk.edge_count(); ++e) eorder[e] = e;
  std::sort(eorder.begin(), eorder.end(),
            [&](int a, int b) { return sk.edge(a).id < sk.edge(b).id; });
  for (int e : eorder) {
    const Edge& ed = sk.edge(e);
    out += "  " + quoted(ed.source_name) + " -> " + quoted(ed.range_name) + " [label=" +
           quoted(ed.id) + ", style=" + style_for(ed.color) + "];\n";
  }
  return out + "}\n";
}

std::string export_dot(const KGraph& g, const SatHerLattice& lat) {
  std::string out = "digraph lattice {\n  rankdir=BT;\n";
  for (size_t i = 0; i < lat.sets.size(); ++i)
    out += "  n" + std::to_string(i) + " [shape=box, label=" +
           quoted(set_label(vertex_names(g, lat.sets[i]))) + "];\n";
  for (auto [lo, hi] : lat.hasse)
    out += "  n" + std::to_string(lo) + " -> n" + std::to_string(hi) + ";\n";
  return out + "}\n";
}

std::string export_dot(const TailSpace& t) {
  std::string out = "digraph tails {\n  rankdir=BT;\n";
  for (int i = 0; i < t.size(); ++i)
    out += "  n" + std::to_string(i) + " [shape=box, label=" +
           quoted(set_label(t.point_names(i))) + "];\n";
  for (auto [lo, hi] : t.hasse())
    out += "  n" + std::to_string(lo) + " -> n" + std::to_string(hi) + ";\n";
  return out + "}\n";
}

std::string export_json(const KGraph& g) {
  const Skeleton& sk = g.skeleton();
  json j;
  j["rank"] = g.rank();
  std::vector<std::string> vnames;
  for (int v = 0; v < sk.vertex_count(); ++v) vnames.push_back(sk.vertex_id(v));
  std::sort(vnames.begin(), vnames.end());
  j["vertices"] = vnames;
  std::vector<int> eorder(sk.edge_count());
  for (int e = 0; e < sk.edge_count(); ++e) eorder[e] = e;
  std::sort(eorder.begin(), eorder.end(),
            [&](int a, int b) { return sk.edge(a).id < sk.edge(b).id; });
  json edges = json::array();
  for (int e : eorder) {
    const Edge& ed = sk.edge(e);
    edges.push_back({{"id", ed.id},
                     {"color", ed.color},
                     {"range", ed.range_name},
                     {"source", ed.source_name}});
  }
  j["edges"] = edges;
  std::vector<std::array<std::string, 4>> squares;
  for (const SquareRule& r : g.rules().rules())
    squares.push_back({sk.edge(r.a).id, sk.edge(r.b).id, sk.edge(r.b2).id, sk.edge(r.a2).id});
  std::sort(squares.begin(), squares.end());
  json js = json::array();
  for (const auto& s : squares) js.push_back({s[0], s[1], s[2], s[3]});
  j["squares"] = js;
  // Row-finiteness table: |v·Λ^{e_i}| per vertex and color.
  if (g.validated()) {
    json table = json::object();
    for (const auto& vn : vnames) {
      int v = sk.need_vertex(vn);
      json row = json::array();
      for (int c = 1; c <= g.rank(); ++c) row.push_back(sk.edges_at(v, c, End::range).size());
      table[vn] = row;
    }
    j["edges_at_range"] = table;
  }
  return j.dump(2) + "\n";
}

std::string export_json(const KGraph& g, const SatHerLattice& lat) {
  json j;
  json sets = json::array();
  for (const Bits& s : lat.sets) sets.push_back(vertex_names(g, s));
  j["sets"] = sets;
  json hasse = json::array();
  for (auto [lo, hi] : lat.hasse) hasse.push_back({lo, hi});
  j["hasse"] = hasse;
  return j.dump(2) + "\n";
}

std::string export_json(const TailSpace& t, bool with_report) {
  json j;
  json pts = json::array();
  for (int i = 0; i < t.size(); ++i) pts.push_back(t.point_names(i));
  j["points"] = pts;
  json hasse = json::array();
  for (auto [lo, hi] : t.hasse()) hasse.push_back({lo, hi});
  j["hasse"] = hasse;
  if (with_report) {
    SpectralReport r = t.report();
    j["report"] = {{"points", r.points},
                   {"closed_sets", r.closed_sets},
                   {"t0", r.t0},
                   {"kuratowski", r.kuratowski()},
                   {"sober", r.sober},
                   {"basis_generates", r.basis_generates},
                   {"spectral", r.spectral()}};
    if (!r.detail.empty()) j["report"]["detail"] = r.detail;
  }
  return j.dump(2) + "\n";
}

std::string export_json(const KGraph& g, const Verdict& v) {
  return verdict_json(g, v).dump(2) + "\n";
}

std::string export_json(const KGraph& g, const StrongVerdict& v) {
  json j;
  j["overall"] = verdict_json(g, v.overall);
  json per = json::array();
  for (const QuotientVerdict& qv : v.per_quotient) {
    json entry;
    entry["H"] = vertex_names(g, qv.h);
    KGraph q = quotient(g, qv.h);
    entry["verdict"] = verdict_json(q, qv.verdict);
    per.push_back(entry);
  }
  j["per_quotient"] = per;
  return j.dump(2) + "\n";
}

std::string report_json(const ValidationReport& rep) {
  json j;
  j["ok"] = rep.ok();
  json issues = json::array();
  for (const Issue& i : rep.issues) issues.push_back({{"code", i.code}, {"detail", i.detail}});
  j["issues"] = issues;
  return j.dump(2) + "\n";
}

}  // namespace kg
