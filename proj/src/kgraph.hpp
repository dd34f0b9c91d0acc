#pragma once
#include <functional>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "bits.hpp"
#include "degree.hpp"
#include "morphism.hpp"
#include "rules.hpp"
#include "skeleton.hpp"

namespace kg {

// Finitely presented k-graph: a skeleton plus a complete square collection.
// All morphism operations require a validated instance; validation also
// freezes the caches, after which the object is immutable and safe for
// concurrent reads.
class KGraph {
 public:
  KGraph(Skeleton sk, RuleSet rules) : sk_(std::move(sk)), rules_(std::move(rules)) {}

  const Skeleton& skeleton() const { return sk_; }
  const RuleSet& rules() const { return rules_; }
  int rank() const { return sk_.rank(); }
  int vertex_count() const { return sk_.vertex_count(); }

  // Runs skeleton, square and (for k >= 3) cube validation. Marks the graph
  // validated when everything passes.
  ValidationReport validate();
  // Coherence of square rewriting around every tri-colored cube.
  ValidationReport validate_cubes() const;
  bool validated() const { return validated_; }
  void require_validated() const {
    if (!validated_) fail(Errc::not_validated, "operation requires a validated k-graph");
  }

  // v <= w iff some path has range v and source w. Reflexive.
  bool le(int v, int w) const;
  const Bits& up_set(int v) const;  // {w : v <= w}

  Morphism identity(int v) const;
  // Checked constructors: verify edges exist and compose.
  Morphism path(const std::vector<std::string>& edge_ids) const;
  Morphism make(int range, std::vector<int> word) const;

  Degree degree_of(const Morphism& m) const;
  int source_of(const Morphism& m) const;

  // Unique representative with colors ascending along the word.
  Morphism normal_form(const Morphism& m) const;
  bool morphisms_equal(const Morphism& p, const Morphism& q) const;
  Morphism compose(const Morphism& p, const Morphism& q) const;

  // m = prefix·rest with degree_of(prefix) = at.
  std::pair<Morphism, Morphism> split(const Morphism& m, const Degree& at) const;
  Morphism segment(const Morphism& m, const Degree& from, const Degree& to) const;
  int vertex_at(const Morphism& m, const Degree& at) const;

  // v·Λ^d in canonical (normal-form, id-lexicographic) order.
  std::vector<Morphism> morphisms_from(int v, const Degree& d) const;
  // Visitor form; fn may return false to stop. Returns false iff stopped.
  bool for_each_morphism(int v, const Degree& d,
                         const std::function<bool(const Morphism&)>& fn) const;

  // Provenance for graphs built as cartesian products; analyses may use the
  // factors when both are available.
  const KGraph* factor_left() const { return left_.get(); }
  const KGraph* factor_right() const { return right_.get(); }
  void set_factors(std::shared_ptr<const KGraph> l, std::shared_ptr<const KGraph> r) {
    left_ = std::move(l);
    right_ = std::move(r);
  }

 private:
  void check_degree_rank(const Degree& d) const {
    if (d.rank() != rank()) fail(Errc::bad_argument, "degree rank mismatch");
  }
  Skeleton sk_;
  RuleSet rules_;
  bool validated_ = false;
  std::vector<Bits> reach_;
  std::shared_ptr<const KGraph> left_, right_;
};

}  // namespace kg
