#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <vector>

#include "rankone/common.hpp"

namespace rankone {

/// Tuple of nonnegative integer exponents.  Used for monomials z^k, sphere
/// moments omega^k and the f_{p,q} basis labels.
class MultiIndex {
 public:
  MultiIndex() = default;
  explicit MultiIndex(std::size_t len) : c_(len, 0) {}
  MultiIndex(std::initializer_list<int> v) : c_(v) { check(); }
  explicit MultiIndex(std::vector<int> v) : c_(std::move(v)) { check(); }

  std::size_t size() const { return c_.size(); }
  int operator[](std::size_t i) const { return c_[i]; }
  int& operator[](std::size_t i) { return c_[i]; }
  const std::vector<int>& components() const { return c_; }

  /// |k| = sum of components.
  int total() const { return std::accumulate(c_.begin(), c_.end(), 0); }

  /// k! = product of component factorials, as a double.
  double factorial() const {
    double f = 1.0;
    for (int k : c_)
      for (int j = 2; j <= k; ++j) f *= j;
    return f;
  }

  bool is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](int k) { return k == 0; });
  }

  /// Componentwise k <= l.
  bool leq(const MultiIndex& l) const {
    if (size() != l.size()) return false;
    for (std::size_t i = 0; i < size(); ++i)
      if (c_[i] > l.c_[i]) return false;
    return true;
  }

  /// Strict partial order: k <= l componentwise and k != l.
  bool lt(const MultiIndex& l) const { return leq(l) && c_ != l.c_; }

  MultiIndex operator+(const MultiIndex& o) const {
    MultiIndex r(size());
    for (std::size_t i = 0; i < size(); ++i) r.c_[i] = c_[i] + o.c_[i];
    return r;
  }
  /// Componentwise difference; requires o.leq(*this).
  MultiIndex operator-(const MultiIndex& o) const {
    MultiIndex r(size());
    for (std::size_t i = 0; i < size(); ++i) {
      r.c_[i] = c_[i] - o.c_[i];
      if (r.c_[i] < 0) throw DomainError("MultiIndex subtraction went negative");
    }
    return r;
  }

  friend bool operator==(const MultiIndex& a, const MultiIndex& b) {
    return a.c_ == b.c_;
  }
  friend bool operator<(const MultiIndex& a, const MultiIndex& b) {
    return a.c_ < b.c_;  // lexicographic, for use as map key
  }

 private:
  void check() const {
    for (int k : c_)
      if (k < 0) throw StructuralError("MultiIndex components must be >= 0");
  }
  std::vector<int> c_;
};

/// All multi-indices of the given length with |k| == total.
void for_each_multi_index_of_total(std::size_t len, int total,
                                   const std::function<void(const MultiIndex&)>& fn);

/// All multi-indices of the given length with |k| <= max_total,
/// in increasing order of |k|.
void for_each_multi_index_up_to(std::size_t len, int max_total,
                                const std::function<void(const MultiIndex&)>& fn);

std::vector<MultiIndex> multi_indices_of_total(std::size_t len, int total);
std::vector<MultiIndex> multi_indices_up_to(std::size_t len, int max_total);

}  // namespace rankone
