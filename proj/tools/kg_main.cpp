// Command-line front end; everything goes through the C API in
// include/kgraph/kgraph.h. Exit codes: 0 verdict/result computed,
// 1 validation or computation failure, 2 usage error.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "kgraph/kgraph.h"

namespace {

struct Graph {
  kg_graph* g = nullptr;
  ~Graph() { kg_free(g); }
};

struct Str {
  char* s = nullptr;
  ~Str() { kg_string_free(s); }
};

int exit_code(kg_status st) {
  switch (st) {
    case KG_OK:
      return 0;
    case KG_ERR_ARG:
      return 2;
    default:
      return 1;
  }
}

int complain(kg_status st) {
  std::cerr << "error: " << kg_last_error() << "\n";
  return exit_code(st);
}

int load(const std::string& path, Graph& out) {
  kg_status st = kg_read_file(path.c_str(), &out.g);
  if (st != KG_OK) return complain(st);
  Str report;
  st = kg_validate(out.g, &report.s);
  if (st != KG_OK) {
    std::cerr << "validation failed for '" << path << "':\n" << kg_last_error();
    return 1;
  }
  return 0;
}

int emit_graph(kg_graph* g) {
  Str text;
  kg_status st = kg_emit(g, &text.s);
  if (st != KG_OK) return complain(st);
  std::cout << text.s;
  return 0;
}

std::string read_file(const std::string& path, bool& ok) {
  std::ifstream in(path);
  if (!in) {
    ok = false;
    return {};
  }
  std::stringstream ss;
  ss << in.rdbuf();
  ok = true;
  return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"analyses of finitely presented higher-rank graphs"};
  app.require_subcommand(1);

  std::string file, file2, path, set_csv, bounds, labels_path, vertex;
  std::string lattice_method = "closure", tails_method = "mt";
  bool as_json = false, as_dot = false;
  int amax = 2, bmax = 2;

  auto* c_validate = app.add_subcommand("validate", "check the k-graph axioms");
  c_validate->add_option("file", file)->required();
  c_validate->add_flag("--json", as_json, "emit the report as JSON");

  auto* c_info = app.add_subcommand("info", "summary of a presentation");
  c_info->add_option("file", file)->required();

  auto* c_nf = app.add_subcommand("normal-form", "canonical word of a path");
  c_nf->add_option("file", file)->required();
  c_nf->add_option("--path", path, "comma-separated edge ids, range side first")->required();

  auto* c_sat = app.add_subcommand("saturate", "saturation of a vertex set");
  c_sat->add_option("file", file)->required();
  c_sat->add_option("--set", set_csv, "comma-separated vertex ids");

  auto* c_hcl = app.add_subcommand("hclose", "hereditary closure of a vertex set");
  c_hcl->add_option("file", file)->required();
  c_hcl->add_option("--set", set_csv, "comma-separated vertex ids");

  auto* c_lat = app.add_subcommand("lattice", "lattice of saturated hereditary sets");
  c_lat->add_option("file", file)->required();
  c_lat->add_option("--method", lattice_method, "brute|closure|both")->capture_default_str();
  c_lat->add_flag("--json", as_json);
  c_lat->add_flag("--dot", as_dot);

  auto* c_quot = app.add_subcommand("quotient", "k-graph on the complement of a set");
  c_quot->add_option("file", file)->required();
  c_quot->add_option("--set", set_csv, "saturated hereditary vertex set");

  auto* c_tails = app.add_subcommand("tails", "maximal tails");
  c_tails->add_option("file", file)->required();
  c_tails->add_option("--method", tails_method, "direct|mt|both")->capture_default_str();
  c_tails->add_flag("--json", as_json);
  c_tails->add_flag("--dot", as_dot);

  auto* c_top = app.add_subcommand("topology", "tail-space topology and spectral checks");
  c_top->add_option("file", file)->required();
  c_top->add_flag("--json", as_json);
  c_top->add_flag("--dot", as_dot);

  auto* c_ap = app.add_subcommand("aperiodic", "aperiodicity verdict");
  c_ap->add_option("file", file)->required();
  c_ap->add_option("--bounds", bounds, "witness search bound, one entry per color");

  auto* c_sap = app.add_subcommand("strong-aperiodic", "strong aperiodicity verdict");
  c_sap->add_option("file", file)->required();
  c_sap->add_option("--bounds", bounds, "witness search bound, one entry per color");

  auto* c_quar = app.add_subcommand("quartet", "search for an aperiodic quartet");
  c_quar->add_option("file", file)->required();
  c_quar->add_option("--vertex", vertex)->required();
  c_quar->add_option("--amax", amax)->capture_default_str();
  c_quar->add_option("--bmax", bmax)->capture_default_str();

  auto* c_prod = app.add_subcommand("product", "cartesian product of two presentations");
  c_prod->add_option("a", file)->required();
  c_prod->add_option("b", file2)->required();

  auto* c_skew = app.add_subcommand("skew", "skew product over a finite abelian group");
  c_skew->add_option("file", file)->required();
  c_skew->add_option("--labels", labels_path, "label file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  const char* fmt = as_json ? "json" : (as_dot ? "dot" : "text");

  if (c_validate->parsed()) {
    Graph g;
    kg_status st = kg_read_file(file.c_str(), &g.g);
    if (st != KG_OK) return complain(st);
    Str report;
    st = kg_validate(g.g, &report.s);
    if (as_json)
      std::cout << report.s;
    else if (st == KG_OK)
      std::cout << "valid\n";
    else
      std::cout << kg_last_error();
    return st == KG_OK ? 0 : 1;
  }

  Graph g;
  if (int rc = load(file, g)) return rc;

  if (c_info->parsed()) {
    Str s;
    kg_status st = kg_info_json(g.g, &s.s);
    if (st != KG_OK) return complain(st);
    std::cout << s.s;
    return 0;
  }
  if (c_nf->parsed()) {
    Str s;
    kg_status st = kg_normal_form(g.g, path.c_str(), &s.s);
    if (st != KG_OK) return complain(st);
    std::cout << s.s << "\n";
    return 0;
  }
  if (c_sat->parsed() || c_hcl->parsed()) {
    Str s;
    kg_status st = c_sat->parsed() ? kg_saturate(g.g, set_csv.c_str(), &s.s)
                                   : kg_hereditary_closure(g.g, set_csv.c_str(), &s.s);
    if (st != KG_OK) return complain(st);
    std::cout << "{" << s.s << "}\n";
    return 0;
  }
  if (c_lat->parsed()) {
    Str s;
    kg_status st = kg_lattice(g.g, lattice_method.c_str(), fmt, &s.s);
    if (st != KG_OK) return complain(st);
    std::cout << s.s;
    return 0;
  }
  if (c_quot->parsed()) {
    Graph q;
    kg_status st = kg_quotient(g.g, set_csv.c_str(), &q.g);
    if (st != KG_OK) return complain(st);
    return emit_graph(q.g);
  }
  if (c_tails->parsed()) {
    Str s;
    kg_status st = kg_tails(g.g, tails_method.c_str(), fmt, &s.s);
    if (st != KG_OK) return complain(st);
    std::cout << s.s;
    return 0;
  }
  if (c_top->parsed()) {
    Str s;
    kg_status st = kg_topology(g.g, fmt, &s.s);
    if (st != KG_OK) return complain(st);
    std::cout << s.s;
    return 0;
  }
  if (c_ap->parsed() || c_sap->parsed()) {
    Str s;
    kg_status st = c_ap->parsed()
                       ? kg_aperiodic(g.g, bounds.empty() ? nullptr : bounds.c_str(), &s.s)
                       : kg_strong_aperiodic(g.g, bounds.empty() ? nullptr : bounds.c_str(), &s.s);
    if (st != KG_OK) return complain(st);
    std::cout << s.s;
    return 0;
  }
  if (c_quar->parsed()) {
    Str s;
    kg_status st = kg_quartet(g.g, vertex.c_str(), amax, bmax, &s.s);
    if (st != KG_OK) return complain(st);
    std::cout << s.s;
    return 0;
  }
  if (c_prod->parsed()) {
    Graph h;
    if (int rc = load(file2, h)) return rc;
    Graph p;
    kg_status st = kg_product(g.g, h.g, &p.g);
    if (st != KG_OK) return complain(st);
    return emit_graph(p.g);
  }
  if (c_skew->parsed()) {
    bool ok = false;
    std::string labels = read_file(labels_path, ok);
    if (!ok) {
      std::cerr << "error: cannot open '" << labels_path << "'\n";
      return 1;
    }
    Graph p;
    kg_status st = kg_skew(g.g, labels.c_str(), &p.g);
    if (st != KG_OK) return complain(st);
    return emit_graph(p.g);
  }
  return 2;
}
