#pragma once
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace kg {

// Subset of {0..n-1} backed by 64-bit words. Used for vertex sets and
// reachability rows; all binary ops assume equal universes.
class Bits {
 public:
  Bits() = default;
  explicit Bits(int n) : n_(n), w_((n + 63) / 64, 0) {}
  static Bits of(int n, std::initializer_list<int> xs) {
    Bits b(n);
    for (int x : xs) b.set(x);
    return b;
  }
  static Bits full(int n) {
    Bits b(n);
    for (int i = 0; i < n; ++i) b.set(i);
    return b;
  }

  int universe() const { return n_; }
  void set(int i) { w_[i >> 6] |= (1ull << (i & 63)); }
  void reset(int i) { w_[i >> 6] &= ~(1ull << (i & 63)); }
  bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }

  int count() const {
    int c = 0;
    for (auto x : w_) c += __builtin_popcountll(x);
    return c;
  }
  bool empty() const {
    for (auto x : w_)
      if (x) return false;
    return true;
  }
  bool subset_of(const Bits& o) const {
    for (size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & ~o.w_[i]) return false;
    return true;
  }
  Bits& operator|=(const Bits& o) {
    for (size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
    return *this;
  }
  Bits& operator&=(const Bits& o) {
    for (size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
    return *this;
  }
  Bits complement() const {
    Bits r(n_);
    for (size_t i = 0; i < w_.size(); ++i) r.w_[i] = ~w_[i];
    if (n_ & 63) r.w_.back() &= (1ull << (n_ & 63)) - 1;
    return r;
  }
  friend Bits operator|(Bits a, const Bits& b) { return a |= b; }
  friend Bits operator&(Bits a, const Bits& b) { return a &= b; }
  bool operator==(const Bits&) const = default;

  std::vector<int> members() const {
    std::vector<int> v;
    for (int i = 0; i < n_; ++i)
      if (test(i)) v.push_back(i);
    return v;
  }

 private:
  int n_ = 0;
  std::vector<uint64_t> w_;
};

}  // namespace kg
