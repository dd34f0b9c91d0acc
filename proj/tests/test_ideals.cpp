#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "format.hpp"
#include "helpers.hpp"
#include "tails.hpp"

using namespace kg;
using kgtest::fixture_corpus;
using kgtest::names_of;
using kgtest::set_of;

namespace {

Bits random_subset(std::mt19937& rng, int n) {
  Bits b(n);
  for (int i = 0; i < n; ++i)
    if (rng() & 1) b.set(i);
  return b;
}

std::vector<std::vector<std::string>> lattice_names(const KGraph& g, const SatHerLattice& lat) {
  std::vector<std::vector<std::string>> out;
  for (const Bits& s : lat.sets) out.push_back(names_of(g, s));
  return out;
}

}  // namespace

TEST_CASE("le is reflexive and follows paths") {
  KGraph c3 = loop_chain(3);
  int v0 = c3.skeleton().need_vertex("0");
  int v2 = c3.skeleton().need_vertex("2");
  CHECK(c3.le(v0, v0));
  CHECK(c3.le(v0, v2));
  CHECK_FALSE(c3.le(v2, v0));
}

TEST_CASE("hereditary closure") {
  KGraph c3 = loop_chain(3);
  CHECK(hereditary_closure(c3, Bits(3)).empty());
  CHECK(names_of(c3, hereditary_closure(c3, set_of(c3, {"0"}))) ==
        std::vector<std::string>{"0", "1", "2"});
  CHECK(names_of(c3, hereditary_closure(c3, set_of(c3, {"2"}))) ==
        std::vector<std::string>{"2"});
}

TEST_CASE("hereditary and saturated predicates") {
  KGraph c3 = loop_chain(3);
  Bits empty(3), full = Bits::full(3);
  CHECK(is_hereditary(c3, empty));
  CHECK(is_saturated(c3, empty));
  CHECK(is_hereditary(c3, full));
  CHECK(is_saturated(c3, full));
  Bits mid = set_of(c3, {"1", "2"});
  CHECK(is_hereditary(c3, mid));
  CHECK(is_saturated(c3, mid));
  CHECK_FALSE(is_hereditary(c3, set_of(c3, {"0"})));
}

TEST_CASE("saturation") {
  KGraph c3 = loop_chain(3);
  CHECK(saturate(c3, Bits(3)).empty());
  CHECK(saturate(c3, Bits::full(3)) == Bits::full(3));
  Bits mid = set_of(c3, {"1", "2"});
  CHECK(saturate(c3, mid) == mid);
}

TEST_CASE("lattice of saturated hereditary sets") {
  KGraph tw = twisted33();
  CHECK(sat_her_lattice(tw, LatticeMethod::both).sets.size() == 2);
  KGraph b2 = bouquet(2);
  CHECK(sat_her_lattice(b2, LatticeMethod::both).sets.size() == 2);

  KGraph c3 = loop_chain(3);
  auto lat = sat_her_lattice(c3, LatticeMethod::both);
  std::vector<std::vector<std::string>> expect{{}, {"2"}, {"1", "2"}, {"0", "1", "2"}};
  CHECK(lattice_names(c3, lat) == expect);
  // A chain of four sets has three covering pairs.
  CHECK(lat.hasse.size() == 3);
}

TEST_CASE("both lattice methods agree on every fixture") {
  for (auto& [name, g] : fixture_corpus()) {
    CAPTURE(name);
    CHECK_NOTHROW(sat_her_lattice(g, LatticeMethod::both));
  }
}

TEST_CASE("brute-force lattice respects its cap") {
  KGraph c3 = loop_chain(3);
  IdealCaps caps;
  caps.brute_max_vertices = 2;
  CHECK_THROWS_AS(sat_her_lattice(c3, LatticeMethod::brute, caps), Error);
  CHECK_NOTHROW(sat_her_lattice(c3, LatticeMethod::next_closure, caps));
}

TEST_CASE("quotients") {
  KGraph c3 = loop_chain(3);
  CHECK(emit_kg(quotient(c3, Bits(3))) == emit_kg(c3));
  CHECK(emit_kg(quotient(c3, set_of(c3, {"2"}))) == emit_kg(loop_chain(2)));
  CHECK(emit_kg(quotient(c3, set_of(c3, {"1", "2"}))) == emit_kg(loop_chain(1)));
  CHECK_THROWS_AS(quotient(c3, set_of(c3, {"0"})), Error);
  CHECK_THROWS_AS(quotient(c3, Bits::full(3)), Error);
}

TEST_CASE("common upper bounds") {
  KGraph c3 = loop_chain(3);
  int v0 = c3.skeleton().need_vertex("0");
  int v1 = c3.skeleton().need_vertex("1");
  int v2 = c3.skeleton().need_vertex("2");
  CHECK(common_upper_bound(c3, v1, v1) == v1);
  CHECK(common_upper_bound(c3, v0, v1) == v1);  // least witness in id order
  CHECK(common_upper_bound(c3, v1, v2) == v2);
  CHECK_THROWS_AS(common_upper_bound(c3, v2, v0), Error);  // 0 not in sat(up(2))
}

TEST_CASE("common upper bound exists for the whole saturated up-set") {
  for (auto& [name, g] : fixture_corpus()) {
    CAPTURE(name);
    for (int v = 0; v < g.vertex_count(); ++v) {
      Bits closure = sat_her_closure(g, g.up_set(v));
      for (int y : closure.members()) {
        int z = common_upper_bound(g, v, y);
        CHECK(g.le(v, z));
        CHECK(g.le(y, z));
      }
    }
  }
}

TEST_CASE("closure operators are extensive, monotone and idempotent") {
  std::mt19937 rng(23);
  for (auto& [name, g] : fixture_corpus()) {
    CAPTURE(name);
    int n = g.vertex_count();
    for (int t = 0; t < 25; ++t) {
      Bits s = random_subset(rng, n);
      Bits s2 = random_subset(rng, n);
      Bits small = s;
      small &= s2;  // small subset of s
      for (auto op : {hereditary_closure, saturate, sat_her_closure}) {
        Bits c = op(g, s);
        CHECK(s.subset_of(c));
        CHECK(op(g, c) == c);
        CHECK(op(g, small).subset_of(c));
      }
    }
  }
}

TEST_CASE("saturation preserves heredity") {
  std::mt19937 rng(29);
  for (auto& [name, g] : fixture_corpus()) {
    CAPTURE(name);
    for (int t = 0; t < 25; ++t) {
      Bits h = hereditary_closure(g, random_subset(rng, g.vertex_count()));
      CHECK(is_hereditary(g, saturate(g, h)));
    }
  }
}

TEST_CASE("the lattice is intersection closed and bounded") {
  for (auto& [name, g] : fixture_corpus()) {
    CAPTURE(name);
    auto lat = sat_her_lattice(g, LatticeMethod::next_closure);
    Bits empty(g.vertex_count());
    Bits full = Bits::full(g.vertex_count());
    CHECK(std::find(lat.sets.begin(), lat.sets.end(), empty) != lat.sets.end());
    CHECK(std::find(lat.sets.begin(), lat.sets.end(), full) != lat.sets.end());
    for (const Bits& a : lat.sets)
      for (const Bits& b : lat.sets) {
        Bits meet = a;
        meet &= b;
        CHECK(std::find(lat.sets.begin(), lat.sets.end(), meet) != lat.sets.end());
      }
  }
}

TEST_CASE("quotients by every proper lattice member are valid") {
  for (auto& [name, g] : fixture_corpus()) {
    CAPTURE(name);
    auto lat = sat_her_lattice(g, LatticeMethod::next_closure);
    for (const Bits& h : lat.sets) {
      if (h.count() == g.vertex_count()) continue;
      KGraph q = quotient(g, h);
      CHECK(q.validated());
      CHECK(q.skeleton().validate().ok());  // includes the no-sources check
    }
  }
}

TEST_CASE("complements of proper lattice members extend and are ancestor closed") {
  for (auto& [name, g] : fixture_corpus()) {
    CAPTURE(name);
    auto lat = sat_her_lattice(g, LatticeMethod::next_closure);
    for (const Bits& h : lat.sets) {
      if (h.count() == g.vertex_count()) continue;
      Bits gamma = h.complement();
      auto chk = check_maximal_tail(g, gamma);
      CHECK(chk.extendable);
      CHECK(chk.ancestor_closed);
    }
  }
}
