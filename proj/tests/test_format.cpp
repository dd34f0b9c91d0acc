#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>

#include "export.hpp"
#include "helpers.hpp"
#include "tails.hpp"

using namespace kg;
using kgtest::fixture_corpus;

namespace {

size_t count_sub(const std::string& hay, const std::string& needle) {
  size_t n = 0;
  for (size_t p = hay.find(needle); p != std::string::npos; p = hay.find(needle, p + 1)) ++n;
  return n;
}

}  // namespace

TEST_CASE("the twisted 3x3 document parses and validates") {
  std::string doc = emit_kg(twisted33());
  KGraph g = parse_kg(doc);
  CHECK(g.validate().ok());
  CHECK(g.rules().rules().size() == 9);
}

TEST_CASE("missing header is a syntax error") {
  CHECK_THROWS_AS(parse_kg("vertex v\n"), Error);
  CHECK_THROWS_AS(parse_kg(""), Error);
}

TEST_CASE("parse errors carry the line") {
  try {
    parse_kg("kgraph k=1\nvertex v\nwat v\n");
    FAIL("expected a parse error");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::parse);
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
}

TEST_CASE("duplicate ids are parse failures") {
  CHECK_THROWS_AS(parse_kg("kgraph k=1\nvertex v\nvertex v\n"), Error);
}

TEST_CASE("square orientation is normalized") {
  // The same square written with the descending side first.
  std::string doc =
      "kgraph k=2\nvertex v\n"
      "edge f color=1 range=v source=v\n"
      "edge g color=2 range=v source=v\n"
      "square g f = f g\n";
  KGraph g = parse_kg(doc);
  CHECK(g.validate().ok());
  auto r = g.rules().rules().at(0);
  CHECK(g.skeleton().edge(r.a).id == "f");
  CHECK(g.skeleton().edge(r.b2).id == "g");

  CHECK_THROWS_AS(parse_kg("kgraph k=2\nvertex v\n"
                           "edge f color=1 range=v source=v\n"
                           "edge g color=2 range=v source=v\n"
                           "square f g = f g\n"),
                  Error);
}

TEST_CASE("emit then parse is the identity on every fixture") {
  for (auto& [name, g] : fixture_corpus()) {
    CAPTURE(name);
    std::string doc = emit_kg(g);
    KGraph back = parse_kg(doc);
    CHECK(back.validate().ok());
    CHECK(emit_kg(back) == doc);
  }
}

TEST_CASE("label files parse with zero defaults") {
  KGraph tw = twisted33();
  auto [grp, lab] = parse_labels(tw, kgtest::twist33_labels_text());
  CHECK(grp.name() == "Z3xZ3");
  CHECK(lab.value[tw.skeleton().need_edge("f3")] == std::vector<int>{1, 0});
  CHECK(lab.value[tw.skeleton().need_edge("f1")] == std::vector<int>{0, 0});

  CHECK_THROWS_AS(parse_labels(tw, "label f1 (1,0)\n"), Error);
  CHECK_THROWS_AS(parse_labels(tw, "group Z3xZ3\nlabel nope (1,0)\n"), Error);
  CHECK_THROWS_AS(parse_labels(tw, "group Z3xZ3\nlabel f1 (1)\n"), Error);
  CHECK_THROWS_AS(parse_labels(tw, "group Q8\n"), Error);
}

TEST_CASE("skeleton DOT uses solid then dashed styles") {
  std::string dot = export_dot(twisted33());
  CHECK(count_sub(dot, "style=solid") == 3);
  CHECK(count_sub(dot, "style=dashed") == 3);
}

TEST_CASE("tail space DOT of the chain is a three-node path") {
  TailSpace t = TailSpace::of(loop_chain(3));
  std::string dot = export_dot(t);
  CHECK(count_sub(dot, "shape=box") == 3);
  CHECK(count_sub(dot, " -> ") == 2);
}

TEST_CASE("exports of empty structures are well formed") {
  TailSpace empty = TailSpace::from_sets({}, {});
  CHECK(export_dot(empty) == "digraph tails {\n  rankdir=BT;\n}\n");
  CHECK(export_json(empty, false).find("\"points\": []") != std::string::npos);
}

TEST_CASE("json exports are byte stable") {
  for (auto& [name, g] : fixture_corpus()) {
    CAPTURE(name);
    CHECK(export_json(g) == export_json(g));
    KGraph again = parse_kg(emit_kg(g));
    REQUIRE(again.validate().ok());
    CHECK(export_json(again) == export_json(g));

    auto lat = sat_her_lattice(g);
    auto lat2 = sat_her_lattice(again);
    CHECK(export_json(g, lat) == export_json(again, lat2));
  }
}

TEST_CASE("verdict json carries the certificate") {
  KGraph tw = twisted33();
  std::string j = export_json(tw, aperiodic_status(tw));
  CHECK(j.find("\"status\": \"aperiodic\"") != std::string::npos);
  CHECK(j.find("\"alpha1\": \"f1\"") != std::string::npos);

  KGraph b1 = bouquet(1);
  std::string j2 = export_json(b1, aperiodic_status(b1));
  CHECK(j2.find("\"status\": \"periodic\"") != std::string::npos);
  CHECK(j2.find("\"loop\": \"e1\"") != std::string::npos);
}
