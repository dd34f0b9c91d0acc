#pragma once
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "skeleton.hpp"

namespace kg {

// One factorization square. lhs is the two-edge word a·b with
// color(a) < color(b); rhs is the word b2·a2 for the same morphism with the
// colors in the other order. Shared endpoints: r(a)=r(b2), s(b)=s(a2).
struct SquareRule {
  int a, b;    // lhs, ascending colors
  int b2, a2;  // rhs, descending colors
};

// The square dictionaries of a presentation: for each color pair {i<j}, a
// bijection between composable ij-words and ji-words.
class RuleSet {
 public:
  void add(const SquareRule& r) {
    rules_.push_back(r);
    indexed_ = false;
  }
  const std::vector<SquareRule>& rules() const { return rules_; }

  // ascending word x·y (color(x) < color(y)) -> the equal descending word
  std::optional<std::pair<int, int>> descend(int x, int y) const;
  // descending word y·x (color(y) > color(x)) -> the equal ascending word
  std::optional<std::pair<int, int>> ascend(int y, int x) const;

  // Totality, bijectivity and endpoint compatibility against a valid skeleton.
  ValidationReport validate(const Skeleton& sk) const;

  void build_index() const;

 private:
  static uint64_t key(int x, int y) { return (uint64_t)(uint32_t)x << 32 | (uint32_t)y; }
  std::vector<SquareRule> rules_;
  mutable bool indexed_ = false;
  mutable std::unordered_map<uint64_t, std::pair<int, int>> fwd_;  // lhs word -> rhs word
  mutable std::unordered_map<uint64_t, std::pair<int, int>> bwd_;  // rhs word -> lhs word
};

}  // namespace kg
