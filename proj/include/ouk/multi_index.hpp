#pragma once

#include <initializer_list>
#include <stdexcept>
#include <vector>

#include "ouk/exact.hpp"

namespace ouk {

/// A d-tuple of non-negative integers, used as a Hermite degree vector and as
/// a composition (an ordered way to split an integer into parts).
class MultiIndex {
 public:
  explicit MultiIndex(std::vector<int> components) : components_(std::move(components)) {
    if (components_.empty()) throw std::invalid_argument("MultiIndex: dimension must be >= 1");
    for (int c : components_)
      if (c < 0) throw std::invalid_argument("MultiIndex: components must be non-negative");
  }
  MultiIndex(std::initializer_list<int> components) : MultiIndex(std::vector<int>(components)) {}

  static MultiIndex zero(int dim) { return MultiIndex(std::vector<int>(dim, 0)); }

  int dim() const { return static_cast<int>(components_.size()); }
  int operator[](int i) const { return components_[i]; }
  const std::vector<int>& components() const { return components_; }

  /// |alpha| = alpha_1 + ... + alpha_d
  int order() const {
    int s = 0;
    for (int c : components_) s += c;
    return s;
  }

  /// alpha! = alpha_1! ... alpha_d!
  Int factorial() const {
    Int f = 1;
    for (int c : components_) f *= ouk::factorial(c);
    return f;
  }

  friend bool operator==(const MultiIndex& a, const MultiIndex& b) {
    return a.components_ == b.components_;
  }

 private:
  std::vector<int> components_;
};

}  // namespace ouk
