// Acceptance suite: one check per release criterion, one pass/fail line each.
// Exits nonzero if any criterion fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <vector>

#include "aperiodicity.hpp"
#include "export.hpp"
#include "helpers.hpp"
#include "tails.hpp"

using namespace kg;
using kgtest::fixture_corpus;

namespace {

struct Outcome {
  std::string name;
  bool pass = false;
  double seconds = 0;
  std::string note;
};

std::vector<Outcome> g_results;

void criterion(const std::string& name, const std::function<bool(std::string&)>& fn) {
  Outcome o;
  o.name = name;
  auto t0 = std::chrono::steady_clock::now();
  try {
    o.pass = fn(o.note);
  } catch (const std::exception& e) {
    o.pass = false;
    o.note = std::string("exception: ") + e.what();
  }
  o.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  g_results.push_back(o);
}

std::string run_cli(const std::string& args, int& rc) {
  std::string cmd = std::string(KG_CLI_PATH) + " " + args + " 2>&1";
  FILE* p = popen(cmd.c_str(), "r");
  std::string out;
  if (!p) {
    rc = -1;
    return out;
  }
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, n);
  rc = pclose(p);
  return out;
}

bool within(double sec, double budget, std::string& note) {
  if (sec <= budget) return true;
  note += " exceeded " + std::to_string(budget) + "s budget";
  return false;
}

}  // namespace

// C1: the CLI finds the quartet (f1,f2,g1,g2) on the twisted 3x3 graph.
static bool c1(std::string& note) {
  auto t0 = std::chrono::steady_clock::now();
  int rc = 0;
  std::string out =
      run_cli(std::string("quartet ") + KG_DATA_DIR + "/twist33.kg --vertex v --amax 1 --bmax 1",
              rc);
  double sec = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  note = "cli output: " + out.substr(0, out.find('\n'));
  if (rc != 0) {
    note += " (nonzero exit)";
    return false;
  }
  return out.find("(f1,f2,g1,g2)") == 0 && within(sec, 1.0, note);
}

// C2: quartets at every vertex certify aperiodicity and strong aperiodicity
// of the twisted graph and its Z3xZ3 skew product.
static bool c2(std::string& note) {
  auto t0 = std::chrono::steady_clock::now();
  bool ok = true;
  for (KGraph g : {twisted33(), kgtest::skew33()}) {
    for (int v = 0; v < g.vertex_count(); ++v)
      ok = ok && find_quartet(g, v, 1, 1).has_value();
    Verdict a = aperiodic_status(g);
    ok = ok && a.status == Periodicity::aperiodic && a.exact && a.method == "quartet-cover";
    StrongVerdict s = strong_aperiodic_status(g);
    ok = ok && s.overall.status == Periodicity::aperiodic && s.overall.exact &&
         s.overall.method == "quartet-everywhere";
  }
  double sec = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  note = "both graphs certified";
  return ok && within(sec, 5.0, note);
}

// C3: condition (L) is consistent with the bounded local-periodicity oracle
// on a corpus of at least 200 random valid 1-graphs.
static bool c3(std::string& note) {
  std::mt19937 rng(2024);
  int l_holds = 0, l_fails = 0, inconsistencies = 0;
  for (int t = 0; t < 200; ++t) {
    KGraph g = kgtest::random_1graph(rng, 6, 10);
    ConditionResult l = condition_L(g);
    if (!l.holds) {
      ++l_fails;
      Degree p{(int)l.witness_loop->word.size()};
      if (lp_witness(g, *l.witness_vertex, Degree{0}, p, Degree{6}).has_value())
        ++inconsistencies;
    } else {
      ++l_holds;
      for (int v = 0; v < g.vertex_count() && !inconsistencies; ++v)
        for (int m = 0; m <= 3 && !inconsistencies; ++m)
          for (int n = m + 1; n <= 3; ++n)
            if (!lp_witness(g, v, Degree{m}, Degree{n}, Degree{6}).has_value()) {
              ++inconsistencies;
              break;
            }
    }
  }
  note = std::to_string(l_holds) + " satisfy L, " + std::to_string(l_fails) + " fail L, " +
         std::to_string(inconsistencies) + " inconsistencies";
  return inconsistencies == 0 && l_holds > 0 && l_fails > 0;
}

// C4: brute-force and closure-system lattice enumeration agree on every
// fixture; the three-vertex chain has the expected four-element chain.
static bool c4(std::string& note) {
  for (auto& [name, g] : fixture_corpus()) {
    if (g.vertex_count() > 12) continue;
    sat_her_lattice(g, LatticeMethod::both);  // throws on disagreement
  }
  KGraph c3g = loop_chain(3);
  auto lat = sat_her_lattice(c3g, LatticeMethod::both);
  std::vector<std::vector<std::string>> got;
  for (const Bits& s : lat.sets) got.push_back(vertex_names(c3g, s));
  std::vector<std::vector<std::string>> expect{{}, {"2"}, {"1", "2"}, {"0", "1", "2"}};
  note = "all fixtures agree; chain lattice exact";
  return got == expect;
}

// C5: direct tail enumeration equals the complement route everywhere it
// runs; length-N chains carry exactly N tails forming a chain.
static bool c5(std::string& note) {
  for (auto& [name, g] : fixture_corpus()) {
    if (g.vertex_count() > 12) continue;
    maximal_tails(g, TailMethod::both);  // throws on disagreement
  }
  for (int n = 1; n <= 6; ++n) {
    KGraph g = loop_chain(n);
    auto tails = maximal_tails(g, n <= 12 ? TailMethod::both : TailMethod::complement);
    if ((int)tails.size() != n) {
      note = "chain of length " + std::to_string(n) + " has " + std::to_string(tails.size()) +
             " tails";
      return false;
    }
    if (!homeomorphic(TailSpace::of(g), TailSpace::product_of_chains({n}))) {
      note = "tail space of the length-" + std::to_string(n) + " chain is not a chain";
      return false;
    }
  }
  note = "methods agree; chains have chain tail spaces";
  return true;
}

// C6: the tail-space closure passes every topology check on every fixture.
static bool c6(std::string& note) {
  int spaces = 0;
  for (auto& [name, g] : fixture_corpus()) {
    SpectralReport r = TailSpace::of(g).report();
    if (!r.spectral()) {
      note = name + ": " + r.detail;
      return false;
    }
    ++spaces;
  }
  note = std::to_string(spaces) + " tail spaces spectral";
  return true;
}

// C7: tails of chain products are the product of chains with the product
// right-order topology, up to homeomorphism.
static bool c7(std::string& note) {
  auto t0 = std::chrono::steady_clock::now();
  for (int n = 2; n <= 4; ++n)
    for (int m = 2; m <= 4; ++m) {
      KGraph p = cartesian_product(loop_chain(n), loop_chain(m));
      TailSpace tp = TailSpace::of(p, TailMethod::complement);
      if ((int)tp.size() != n * m ||
          !homeomorphic(tp, TailSpace::product_of_chains({n, m}))) {
        note = std::to_string(n) + "x" + std::to_string(m) + " product mismatch";
        return false;
      }
    }
  double sec = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  note = "all nine products homeomorphic to chain grids";
  return within(sec, 30.0, note);
}

// C8: every quotient by a proper saturated hereditary set is a valid
// k-graph with no sources (cube-checked for rank 3).
static bool c8(std::string& note) {
  int quotients = 0;
  for (auto& [name, g] : fixture_corpus()) {
    for (const Bits& h : sat_her_lattice(g).sets) {
      if (h.count() == g.vertex_count()) continue;
      KGraph q = quotient(g, h);  // validates internally, throws on failure
      if (!q.validated() || !q.skeleton().validate().ok()) {
        note = name + ": invalid quotient";
        return false;
      }
      ++quotients;
    }
  }
  note = std::to_string(quotients) + " quotients validated";
  return true;
}

// C9: segment recomposition and representative independence over 1000
// random triples per rank-2 fixture.
static bool c9(std::string& note) {
  std::mt19937 rng(99);
  int triples = 0, failures = 0;
  for (auto& [name, g] : fixture_corpus()) {
    if (g.rank() != 2) continue;
    for (int t = 0; t < 1000; ++t) {
      Morphism lam = kgtest::random_path(rng, g, 1 + (int)(rng() % 6));
      Degree d = g.degree_of(lam);
      Degree m = kgtest::random_degree_le(rng, d);
      Degree n = m + kgtest::random_degree_le(rng, d - m);
      Morphism a = g.segment(lam, Degree(g.rank()), m);
      Morphism b = g.segment(lam, m, n);
      Morphism c = g.segment(lam, n, d);
      if (!g.morphisms_equal(g.compose(a, g.compose(b, c)), lam)) ++failures;
      Morphism moved = lam;
      if (kgtest::random_square_move(rng, g, moved) &&
          g.normal_form(moved).word != g.normal_form(lam).word)
        ++failures;
      ++triples;
    }
  }
  note = std::to_string(triples) + " triples, " + std::to_string(failures) + " failures";
  return failures == 0 && triples >= 6000;
}

// C10: the aperiodicity verdict of a product of 1-graphs is the conjunction
// of the factor verdicts; no unknowns.
static bool c10(std::string& note) {
  std::mt19937 rng(123);
  int pairs = 0, unknowns = 0, mismatches = 0, periodic_products = 0;
  for (int t = 0; t < 50; ++t) {
    KGraph a = kgtest::random_1graph(rng, 4, 6);
    KGraph b = kgtest::random_1graph(rng, 4, 6);
    bool la = condition_L(a).holds;
    bool lb = condition_L(b).holds;
    KGraph p = cartesian_product(a, b);
    Verdict v = aperiodic_status(p);
    if (v.status == Periodicity::unknown) ++unknowns;
    bool expect_aperiodic = la && lb;
    if (expect_aperiodic != (v.status == Periodicity::aperiodic)) ++mismatches;
    if (v.status == Periodicity::periodic) ++periodic_products;
    ++pairs;
  }
  note = std::to_string(pairs) + " pairs, " + std::to_string(periodic_products) +
         " periodic products, " + std::to_string(unknowns) + " unknown, " +
         std::to_string(mismatches) + " mismatches";
  return pairs == 50 && unknowns == 0 && mismatches == 0 && periodic_products > 0;
}

// C11 (reported finding): saturated hereditary subsets of a product are not
// always products of factor sets; the brute-force enumeration must exhibit a
// counterexample instead of assuming the product form.
static bool c11(std::string& note) {
  KGraph left = loop_chain(2);
  KGraph p = cartesian_product(loop_chain(2), loop_chain(2));
  auto lat = sat_her_lattice(p, LatticeMethod::both);
  auto flat = sat_her_lattice(left, LatticeMethod::both);

  std::vector<Bits> product_sets;
  for (const Bits& h1 : flat.sets)
    for (const Bits& h2 : flat.sets) {
      Bits s(p.vertex_count());
      for (int x : h1.members())
        for (int y : h2.members())
          s.set(p.skeleton().need_vertex("(" + std::to_string(x) + "," + std::to_string(y) +
                                         ")"));
      product_sets.push_back(s);
    }

  std::vector<std::string> counterexamples;
  for (const Bits& s : lat.sets) {
    bool is_product = false;
    for (const Bits& q : product_sets)
      if (q == s) is_product = true;
    if (!is_product) {
      std::string nm;
      for (auto& v : vertex_names(p, s)) nm += (nm.empty() ? "" : ",") + v;
      counterexamples.push_back("{" + nm + "}");
    }
  }
  note = "lattice size " + std::to_string(lat.sets.size()) + "; " +
         std::to_string(counterexamples.size()) +
         " saturated hereditary sets are not products of factor sets";
  if (!counterexamples.empty()) note += ", e.g. " + counterexamples.front();
  return !counterexamples.empty();
}

int main() {
  criterion("C1 quartet via the CLI", c1);
  criterion("C2 quartet fast path for graph and skew product", c2);
  criterion("C3 condition L vs bounded witness oracle (200 graphs)", c3);
  criterion("C4 lattice enumeration oracle equivalence", c4);
  criterion("C5 tail enumeration oracle equivalence and chains", c5);
  criterion("C6 topology axioms on every fixture", c6);
  criterion("C7 chain-product tail spaces (N,M in 2..4)", c7);
  criterion("C8 quotient validity across the lattice", c8);
  criterion("C9 factorization laws on random triples", c9);
  criterion("C10 product aperiodicity matches factor conjunction", c10);
  criterion("C11 product lattice probe (reported finding)", c11);

  int failures = 0;
  for (const Outcome& o : g_results) {
    std::printf("[%s] %s (%.2fs)%s%s\n", o.pass ? "PASS" : "FAIL", o.name.c_str(), o.seconds,
                o.note.empty() ? "" : " — ", o.note.c_str());
    if (!o.pass) ++failures;
  }
  std::printf("%d/%zu criteria passed\n", (int)g_results.size() - failures, g_results.size());
  return failures;
}
