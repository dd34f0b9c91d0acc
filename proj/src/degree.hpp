#pragma once
#include <algorithm>
#include <functional>
#include <initializer_list>
#include <numeric>
#include <string>
#include <vector>

#include "errors.hpp"

namespace kg {

// Element of N^k under the coordinate-wise order. Colors are 1-based.
class Degree {
 public:
  Degree() = default;
  explicit Degree(int rank) : c_(rank, 0) {}
  Degree(std::initializer_list<int> v) : c_(v) {}
  explicit Degree(std::vector<int> v) : c_(std::move(v)) {}

  static Degree unit(int rank, int color) {
    Degree d(rank);
    d.c_[color - 1] = 1;
    return d;
  }
  static Degree ones(int rank) { return Degree(std::vector<int>(rank, 1)); }
  static Degree constant(int rank, int value) { return Degree(std::vector<int>(rank, value)); }

  int rank() const { return (int)c_.size(); }
  int count(int color) const { return c_[color - 1]; }
  void bump(int color, int by) { c_[color - 1] += by; }
  int total() const { return std::accumulate(c_.begin(), c_.end(), 0); }
  bool is_zero() const { return total() == 0; }
  const std::vector<int>& coords() const { return c_; }

  bool operator==(const Degree&) const = default;

  bool le(const Degree& o) const {
    check_rank(o);
    for (int i = 0; i < rank(); ++i)
      if (c_[i] > o.c_[i]) return false;
    return true;
  }
  Degree join(const Degree& o) const {
    check_rank(o);
    Degree r(rank());
    for (int i = 0; i < rank(); ++i) r.c_[i] = std::max(c_[i], o.c_[i]);
    return r;
  }
  Degree meet(const Degree& o) const {
    check_rank(o);
    Degree r(rank());
    for (int i = 0; i < rank(); ++i) r.c_[i] = std::min(c_[i], o.c_[i]);
    return r;
  }
  Degree operator+(const Degree& o) const {
    check_rank(o);
    Degree r(rank());
    for (int i = 0; i < rank(); ++i) r.c_[i] = c_[i] + o.c_[i];
    return r;
  }
  Degree operator-(const Degree& o) const {
    check_rank(o);
    if (!o.le(*this)) fail(Errc::degree_out_of_range, "degree subtraction would go negative");
    Degree r(rank());
    for (int i = 0; i < rank(); ++i) r.c_[i] = c_[i] - o.c_[i];
    return r;
  }
  bool lex_less(const Degree& o) const { return c_ < o.c_; }

  std::string str() const {
    std::string s = "(";
    for (int i = 0; i < rank(); ++i) {
      if (i) s += ',';
      s += std::to_string(c_[i]);
    }
    return s + ")";
  }

 private:
  void check_rank(const Degree& o) const {
    if (rank() != o.rank()) fail(Errc::bad_argument, "degree rank mismatch");
  }
  std::vector<int> c_;
};

// Visit every degree in the box [lo, hi], ordered by (total, lex).
// fn may return false to stop early; returns false iff stopped.
inline bool for_each_degree_in_box(const Degree& lo, const Degree& hi,
                                   const std::function<bool(const Degree&)>& fn) {
  if (!lo.le(hi)) return true;
  int k = lo.rank();
  std::vector<Degree> box;
  std::vector<int> cur = lo.coords();
  while (true) {
    box.push_back(Degree(cur));
    int i = k - 1;
    while (i >= 0 && cur[i] == hi.coords()[i]) {
      cur[i] = lo.coords()[i];
      --i;
    }
    if (i < 0) break;
    ++cur[i];
  }
  std::stable_sort(box.begin(), box.end(), [](const Degree& a, const Degree& b) {
    if (a.total() != b.total()) return a.total() < b.total();
    return a.lex_less(b);
  });
  for (const Degree& d : box)
    if (!fn(d)) return false;
  return true;
}

}  // namespace kg
