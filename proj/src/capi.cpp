#include "kgraph/kgraph.h"

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <sstream>

#include "aperiodicity.hpp"
#include "builders.hpp"
#include "constructions.hpp"
#include "export.hpp"
#include "format.hpp"
#include "ideals.hpp"
#include "tails.hpp"

struct kg_graph {
  kg::KGraph g;
};

namespace {

thread_local std::string t_last_error;

kg_status status_of(kg::Errc c) {
  using kg::Errc;
  switch (c) {
    case Errc::parse:
    case Errc::duplicate_id:
      return KG_ERR_PARSE;
    case Errc::not_validated:
      return KG_ERR_VALIDATION;
    case Errc::too_large:
      return KG_ERR_TOO_LARGE;
    case Errc::no_witness:
    case Errc::internal:
      return KG_ERR_INTERNAL;
    default:
      return KG_ERR_ARG;
  }
}

template <typename F>
kg_status wrap(F&& f) {
  try {
    return f();
  } catch (const kg::Error& e) {
    t_last_error = e.what();
    return status_of(e.code());
  } catch (const std::exception& e) {
    t_last_error = e.what();
    return KG_ERR_INTERNAL;
  }
}

char* dup_string(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

std::vector<std::string> split_csv(const char* csv) {
  std::vector<std::string> out;
  if (!csv) return out;
  std::string s(csv);
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

kg::KGraph& validated(kg_graph* g) {
  if (!g) kg::fail(kg::Errc::bad_argument, "null graph handle");
  if (!g->g.validated()) {
    kg::ValidationReport rep = g->g.validate();
    if (!rep.ok()) kg::fail(kg::Errc::not_validated, "graph is not a valid k-graph:\n" + rep.str());
  }
  return g->g;
}

kg::Bits set_arg(kg::KGraph& g, const char* csv) {
  return kg::vertex_set(g, split_csv(csv));
}

std::string csv_of(const std::vector<std::string>& xs) {
  std::string s;
  for (size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + xs[i];
  return s;
}

kg::AperiodicityOptions options_arg(kg::KGraph& g, const char* bounds_csv) {
  kg::AperiodicityOptions opts(g.rank());
  if (bounds_csv && *bounds_csv) {
    auto parts = split_csv(bounds_csv);
    if ((int)parts.size() != g.rank())
      kg::fail(kg::Errc::bad_argument, "bounds need one entry per color");
    std::vector<int> v;
    for (const auto& p : parts) {
      try {
        v.push_back(std::stoi(p));
      } catch (...) {
        kg::fail(kg::Errc::bad_argument, "bad integer '" + p + "' in bounds");
      }
      if (v.back() < 0) kg::fail(kg::Errc::bad_argument, "bounds must be non-negative");
    }
    opts.bounds.search_box = kg::Degree(v);
    // Keep the tested pairs inside the search horizon.
    opts.bounds.pair_box = opts.bounds.pair_box.meet(opts.bounds.search_box);
  }
  return opts;
}

}  // namespace

extern "C" {

const char* kg_last_error(void) { return t_last_error.c_str(); }

void kg_string_free(char* s) { std::free(s); }

void kg_free(kg_graph* g) { delete g; }

kg_status kg_parse(const char* text, kg_graph** out) {
  return wrap([&]() {
    if (!text || !out) kg::fail(kg::Errc::bad_argument, "null argument");
    *out = new kg_graph{kg::parse_kg(text)};
    return KG_OK;
  });
}

kg_status kg_read_file(const char* path, kg_graph** out) {
  return wrap([&]() {
    if (!path || !out) kg::fail(kg::Errc::bad_argument, "null argument");
    std::ifstream in(path);
    if (!in) kg::fail(kg::Errc::parse, std::string("cannot open '") + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    *out = new kg_graph{kg::parse_kg(ss.str())};
    return KG_OK;
  });
}

kg_status kg_validate(kg_graph* g, char** report_json) {
  return wrap([&]() {
    if (!g) kg::fail(kg::Errc::bad_argument, "null graph handle");
    kg::ValidationReport rep = g->g.validate();
    if (report_json) *report_json = dup_string(kg::report_json(rep));
    if (!rep.ok()) {
      t_last_error = rep.str();
      return KG_ERR_VALIDATION;
    }
    return KG_OK;
  });
}

kg_status kg_info_json(kg_graph* g, char** out) {
  return wrap([&]() {
    if (!out) kg::fail(kg::Errc::bad_argument, "null output");
    *out = dup_string(kg::export_json(validated(g)));
    return KG_OK;
  });
}

kg_status kg_emit(kg_graph* g, char** out) {
  return wrap([&]() {
    if (!g || !out) kg::fail(kg::Errc::bad_argument, "null argument");
    *out = dup_string(kg::emit_kg(g->g));
    return KG_OK;
  });
}

kg_status kg_export_dot(kg_graph* g, char** out) {
  return wrap([&]() {
    if (!g || !out) kg::fail(kg::Errc::bad_argument, "null argument");
    *out = dup_string(kg::export_dot(g->g));
    return KG_OK;
  });
}

kg_status kg_normal_form(kg_graph* g, const char* path_csv, char** out_csv) {
  return wrap([&]() {
    kg::KGraph& kgraph = validated(g);
    auto ids = split_csv(path_csv);
    if (ids.empty()) kg::fail(kg::Errc::bad_argument, "empty path");
    kg::Morphism m = kgraph.path(ids);
    kg::Morphism nf = kgraph.normal_form(m);
    *out_csv = dup_string(kg::morphism_str(kgraph, nf));
    return KG_OK;
  });
}

kg_status kg_saturate(kg_graph* g, const char* set_csv, char** out_csv) {
  return wrap([&]() {
    kg::KGraph& kgraph = validated(g);
    kg::Bits s = kg::saturate(kgraph, set_arg(kgraph, set_csv));
    *out_csv = dup_string(csv_of(kg::vertex_names(kgraph, s)));
    return KG_OK;
  });
}

kg_status kg_hereditary_closure(kg_graph* g, const char* set_csv, char** out_csv) {
  return wrap([&]() {
    kg::KGraph& kgraph = validated(g);
    kg::Bits s = kg::hereditary_closure(kgraph, set_arg(kgraph, set_csv));
    *out_csv = dup_string(csv_of(kg::vertex_names(kgraph, s)));
    return KG_OK;
  });
}

kg_status kg_lattice(kg_graph* g, const char* method, const char* format, char** out) {
  return wrap([&]() {
    kg::KGraph& kgraph = validated(g);
    std::string m = method ? method : "closure";
    kg::LatticeMethod lm = kg::LatticeMethod::next_closure;
    if (m == "brute")
      lm = kg::LatticeMethod::brute;
    else if (m == "closure")
      lm = kg::LatticeMethod::next_closure;
    else if (m == "both")
      lm = kg::LatticeMethod::both;
    else
      kg::fail(kg::Errc::bad_argument, "unknown lattice method '" + m + "'");
    kg::SatHerLattice lat = kg::sat_her_lattice(kgraph, lm);
    std::string f = format ? format : "text";
    if (f == "json")
      *out = dup_string(kg::export_json(kgraph, lat));
    else if (f == "dot")
      *out = dup_string(kg::export_dot(kgraph, lat));
    else if (f == "text") {
      std::string s;
      for (const kg::Bits& b : lat.sets) {
        s += "{" + csv_of(kg::vertex_names(kgraph, b)) + "}\n";
      }
      *out = dup_string(s);
    } else
      kg::fail(kg::Errc::bad_argument, "unknown format '" + f + "'");
    return KG_OK;
  });
}

kg_status kg_quotient(kg_graph* g, const char* set_csv, kg_graph** out) {
  return wrap([&]() {
    kg::KGraph& kgraph = validated(g);
    *out = new kg_graph{kg::quotient(kgraph, set_arg(kgraph, set_csv))};
    return KG_OK;
  });
}

kg_status kg_tails(kg_graph* g, const char* method, const char* format, char** out) {
  return wrap([&]() {
    kg::KGraph& kgraph = validated(g);
    std::string m = method ? method : "mt";
    kg::TailMethod tm = kg::TailMethod::complement;
    if (m == "direct")
      tm = kg::TailMethod::direct;
    else if (m == "mt")
      tm = kg::TailMethod::complement;
    else if (m == "both")
      tm = kg::TailMethod::both;
    else
      kg::fail(kg::Errc::bad_argument, "unknown tail method '" + m + "'");
    kg::TailSpace t = kg::TailSpace::of(kgraph, tm);
    std::string f = format ? format : "text";
    if (f == "json")
      *out = dup_string(kg::export_json(t, false));
    else if (f == "dot")
      *out = dup_string(kg::export_dot(t));
    else if (f == "text") {
      std::string s;
      for (int i = 0; i < t.size(); ++i) {
        auto names = t.point_names(i);
        s += "{" + csv_of(names) + "}\n";
      }
      *out = dup_string(s);
    } else
      kg::fail(kg::Errc::bad_argument, "unknown format '" + f + "'");
    return KG_OK;
  });
}

kg_status kg_topology(kg_graph* g, const char* format, char** out) {
  return wrap([&]() {
    kg::KGraph& kgraph = validated(g);
    kg::TailSpace t = kg::TailSpace::of(kgraph);
    std::string f = format ? format : "text";
    if (f == "json")
      *out = dup_string(kg::export_json(t, true));
    else if (f == "dot")
      *out = dup_string(kg::export_dot(t));
    else if (f == "text") {
      kg::SpectralReport r = t.report();
      std::string s;
      s += "points: " + std::to_string(r.points) + "\n";
      s += "closed sets: " + std::to_string(r.closed_sets) + "\n";
      s += std::string("T0: ") + (r.t0 ? "pass" : "FAIL") + "\n";
      s += std::string("kuratowski: ") + (r.kuratowski() ? "pass" : "FAIL") + "\n";
      s += std::string("sober: ") + (r.sober ? "pass" : "FAIL") + "\n";
      s += std::string("basis S(v) generates: ") + (r.basis_generates ? "pass" : "FAIL") + "\n";
      s += std::string("spectral: ") + (r.spectral() ? "pass" : "FAIL") + "\n";
      if (!r.detail.empty()) s += "detail: " + r.detail + "\n";
      *out = dup_string(s);
    } else
      kg::fail(kg::Errc::bad_argument, "unknown format '" + f + "'");
    return KG_OK;
  });
}

kg_status kg_aperiodic(kg_graph* g, const char* bounds_csv, char** verdict_json) {
  return wrap([&]() {
    kg::KGraph& kgraph = validated(g);
    kg::Verdict v = kg::aperiodic_status(kgraph, options_arg(kgraph, bounds_csv));
    *verdict_json = dup_string(kg::export_json(kgraph, v));
    return KG_OK;
  });
}

kg_status kg_strong_aperiodic(kg_graph* g, const char* bounds_csv, char** verdict_json) {
  return wrap([&]() {
    kg::KGraph& kgraph = validated(g);
    kg::StrongVerdict v = kg::strong_aperiodic_status(kgraph, options_arg(kgraph, bounds_csv));
    *verdict_json = dup_string(kg::export_json(kgraph, v));
    return KG_OK;
  });
}

kg_status kg_quartet(kg_graph* g, const char* vertex, int a_max, int b_max, char** out) {
  return wrap([&]() {
    kg::KGraph& kgraph = validated(g);
    if (!vertex) kg::fail(kg::Errc::bad_argument, "missing vertex");
    int u = kgraph.skeleton().need_vertex(vertex);
    auto q = kg::find_quartet(kgraph, u, a_max, b_max);
    if (!q) {
      *out = dup_string("none\n");
      return KG_OK;
    }
    std::string s = "(" + kg::morphism_str(kgraph, q->alpha1) + "," +
                    kg::morphism_str(kgraph, q->alpha2) + "," +
                    kg::morphism_str(kgraph, q->beta1) + "," +
                    kg::morphism_str(kgraph, q->beta2) + ") a=" + std::to_string(q->a) +
                    " b=" + std::to_string(q->b) + "\n";
    *out = dup_string(s);
    return KG_OK;
  });
}

kg_status kg_product(kg_graph* a, kg_graph* b, kg_graph** out) {
  return wrap([&]() {
    kg::KGraph& ga = validated(a);
    kg::KGraph& gb = validated(b);
    *out = new kg_graph{kg::cartesian_product(ga, gb)};
    return KG_OK;
  });
}

kg_status kg_skew(kg_graph* g, const char* labels_text, kg_graph** out) {
  return wrap([&]() {
    kg::KGraph& kgraph = validated(g);
    if (!labels_text) kg::fail(kg::Errc::bad_argument, "missing labels");
    auto [grp, lab] = kg::parse_labels(kgraph, labels_text);
    *out = new kg_graph{kg::skew_product(kgraph, lab, grp)};
    return KG_OK;
  });
}

}  // extern "C"
