#include "format.hpp"

#include <algorithm>
#include <array>
#include <optional>
#include <sstream>

namespace kg {

namespace {

[[noreturn]] void syntax(int line, const std::string& reason) {
  fail(Errc::parse, "line " + std::to_string(line) + ": " + reason);
}

std::vector<std::string> tokens_of(const std::string& line) {
  std::string clean = line.substr(0, line.find('#'));
  std::istringstream is(clean);
  std::vector<std::string> toks;
  std::string t;
  while (is >> t) toks.push_back(t);
  return toks;
}

int int_field(const std::string& tok, const std::string& key, int line) {
  if (tok.rfind(key + "=", 0) != 0) syntax(line, "expected " + key + "=<int>, got '" + tok + "'");
  try {
    return std::stoi(tok.substr(key.size() + 1));
  } catch (...) {
    syntax(line, "bad integer in '" + tok + "'");
  }
}

std::string str_field(const std::string& tok, const std::string& key, int line) {
  if (tok.rfind(key + "=", 0) != 0) syntax(line, "expected " + key + "=<id>, got '" + tok + "'");
  std::string v = tok.substr(key.size() + 1);
  if (v.empty()) syntax(line, "empty " + key + " id");
  return v;
}

}  // namespace

KGraph parse_kg(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  int lineno = 0;
  std::optional<Skeleton> sk;
  struct RawSquare {
    std::string e1, e2, e3, e4;
    int line;
  };
  std::vector<RawSquare> raw_squares;

  while (std::getline(is, line)) {
    ++lineno;
    auto toks = tokens_of(line);
    if (toks.empty()) continue;
    const std::string& kw = toks[0];
    if (kw == "kgraph") {
      if (sk) syntax(lineno, "duplicate kgraph header");
      if (toks.size() != 2) syntax(lineno, "usage: kgraph k=<int>");
      int k = int_field(toks[1], "k", lineno);
      if (k < 1) syntax(lineno, "rank must be at least 1");
      sk.emplace(k);
      continue;
    }
    if (!sk) syntax(lineno, "file must start with 'kgraph k=<int>'");
    if (kw == "vertex") {
      if (toks.size() != 2) syntax(lineno, "usage: vertex <id>");
      try {
        sk->add_vertex(toks[1]);
      } catch (const Error& e) {
        syntax(lineno, e.what());
      }
    } else if (kw == "edge") {
      if (toks.size() != 5) syntax(lineno, "usage: edge <id> color=<int> range=<vid> source=<vid>");
      int color = int_field(toks[2], "color", lineno);
      std::string range = str_field(toks[3], "range", lineno);
      std::string source = str_field(toks[4], "source", lineno);
      try {
        sk->add_edge(toks[1], color, range, source);
      } catch (const Error& e) {
        syntax(lineno, e.what());
      }
    } else if (kw == "square") {
      if (toks.size() != 6 || toks[3] != "=")
        syntax(lineno, "usage: square <e1> <e2> = <e3> <e4>");
      raw_squares.push_back({toks[1], toks[2], toks[4], toks[5], lineno});
    } else {
      syntax(lineno, "unknown directive '" + kw + "'");
    }
  }
  if (!sk) syntax(lineno, "missing 'kgraph k=<int>' header");

  RuleSet rules;
  for (const RawSquare& rs : raw_squares) {
    auto need = [&](const std::string& id) {
      auto e = sk->find_edge(id);
      if (!e) syntax(rs.line, "unknown edge '" + id + "' in square");
      return *e;
    };
    int x1 = need(rs.e1), x2 = need(rs.e2), x3 = need(rs.e3), x4 = need(rs.e4);
    int c1 = sk->edge(x1).color, c2 = sk->edge(x2).color;
    int c3 = sk->edge(x3).color, c4 = sk->edge(x4).color;
    if (c1 == c2 || c3 == c4) syntax(rs.line, "each square side must use two distinct colors");
    if (std::minmax(c1, c2) != std::minmax(c3, c4))
      syntax(rs.line, "the two square sides must use the same color pair");
    bool first_ascending = c1 < c2;
    bool second_ascending = c3 < c4;
    if (first_ascending == second_ascending)
      syntax(rs.line, "one square side must list the lower color first, the other the higher");
    if (first_ascending)
      rules.add({x1, x2, x3, x4});
    else
      rules.add({x3, x4, x1, x2});
  }
  return KGraph(std::move(*sk), std::move(rules));
}

std::string emit_kg(const KGraph& g) {
  const Skeleton& sk = g.skeleton();
  std::ostringstream os;
  os << "kgraph k=" << g.rank() << "\n";

  std::vector<std::string> vnames;
  for (int v = 0; v < sk.vertex_count(); ++v) vnames.push_back(sk.vertex_id(v));
  std::sort(vnames.begin(), vnames.end());
  for (const auto& v : vnames) os << "vertex " << v << "\n";

  std::vector<int> eorder(sk.edge_count());
  for (int e = 0; e < sk.edge_count(); ++e) eorder[e] = e;
  std::sort(eorder.begin(), eorder.end(),
            [&](int a, int b) { return sk.edge(a).id < sk.edge(b).id; });
  for (int e : eorder) {
    const Edge& ed = sk.edge(e);
    os << "edge " << ed.id << " color=" << ed.color << " range=" << ed.range_name
       << " source=" << ed.source_name << "\n";
  }

  std::vector<std::array<std::string, 4>> squares;
  for (const SquareRule& r : g.rules().rules())
    squares.push_back(
        {sk.edge(r.a).id, sk.edge(r.b).id, sk.edge(r.b2).id, sk.edge(r.a2).id});
  std::sort(squares.begin(), squares.end());
  for (const auto& s : squares)
    os << "square " << s[0] << " " << s[1] << " = " << s[2] << " " << s[3] << "\n";
  return os.str();
}

std::pair<GroupSpec, Labeling> parse_labels(const KGraph& g, const std::string& text) {
  std::istringstream is(text);
  std::string line;
  int lineno = 0;
  std::optional<GroupSpec> grp;
  std::optional<Labeling> lab;
  std::vector<bool> seen(g.skeleton().edge_count(), false);

  while (std::getline(is, line)) {
    ++lineno;
    auto toks = tokens_of(line);
    if (toks.empty()) continue;
    if (toks[0] == "group") {
      if (grp) syntax(lineno, "duplicate group line");
      if (toks.size() != 2) syntax(lineno, "usage: group Z<n1>xZ<n2>...");
      grp = GroupSpec::parse(toks[1]);
      lab = Labeling::zero(g, *grp);
    } else if (toks[0] == "label") {
      if (!grp) syntax(lineno, "label before group line");
      if (toks.size() != 3) syntax(lineno, "usage: label <edge> (<g1>,<g2>,...)");
      auto e = g.skeleton().find_edge(toks[1]);
      if (!e) syntax(lineno, "unknown edge '" + toks[1] + "'");
      if (seen[*e]) syntax(lineno, "duplicate label for edge '" + toks[1] + "'");
      seen[*e] = true;
      const std::string& t = toks[2];
      if (t.size() < 2 || t.front() != '(' || t.back() != ')')
        syntax(lineno, "label tuple must look like (0,1)");
      std::vector<int> val;
      std::istringstream ts(t.substr(1, t.size() - 2));
      std::string piece;
      while (std::getline(ts, piece, ',')) {
        try {
          val.push_back(std::stoi(piece));
        } catch (...) {
          syntax(lineno, "bad integer '" + piece + "' in label tuple");
        }
      }
      if ((int)val.size() != grp->rank())
        syntax(lineno, "label tuple must have " + std::to_string(grp->rank()) + " entries");
      lab->value[*e] = grp->add(grp->zero(), val);  // normalize into range
    } else {
      syntax(lineno, "unknown directive '" + toks[0] + "'");
    }
  }
  if (!grp) syntax(lineno, "missing 'group' line");
  return {*grp, *lab};
}

}  // namespace kg
