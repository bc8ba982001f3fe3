#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ouk/exact.hpp"

namespace ouk {

/// Exponent pair of a normal-ordered monomial x^m y^n (all x factors to the
/// left of all y factors).
struct WeylMonomial {
  int x_pow = 0;
  int y_pow = 0;
  friend bool operator<(const WeylMonomial& a, const WeylMonomial& b) {
    return a.x_pow != b.x_pow ? a.x_pow < b.x_pow : a.y_pow < b.y_pow;
  }
  friend bool operator==(const WeylMonomial& a, const WeylMonomial& b) {
    return a.x_pow == b.x_pow && a.y_pow == b.y_pow;
  }
};

/// Element of the Weyl algebra in two generators x, y with xy - yx = -1,
/// stored in normal order with exact rational coefficients.  The normal form
/// is canonical (no zero coefficients are kept), so equality of elements is
/// equality of representations.
class WeylElement {
 public:
  WeylElement() = default;  // zero

  static WeylElement constant(const Rat& c);
  static WeylElement one() { return constant(1); }
  static WeylElement x(int power = 1) { return monomial(power, 0, 1); }
  static WeylElement y(int power = 1) { return monomial(0, power, 1); }
  static WeylElement monomial(int x_pow, int y_pow, const Rat& coeff);

  bool is_zero() const { return terms_.empty(); }
  const std::map<WeylMonomial, Rat>& terms() const { return terms_; }

  WeylElement& operator+=(const WeylElement& rhs);
  WeylElement& operator-=(const WeylElement& rhs);
  friend WeylElement operator+(WeylElement a, const WeylElement& b) { return a += b; }
  friend WeylElement operator-(WeylElement a, const WeylElement& b) { return a -= b; }
  friend WeylElement operator*(const Rat& c, const WeylElement& a);

  /// Normal-ordered product.  Every out-of-order pair is rewritten through
  /// y x = x y + 1, which for whole monomials amounts to
  ///
  ///     y^b x^c = sum_k k! C(b,k) C(c,k) x^(c-k) y^(b-k).
  friend WeylElement operator*(const WeylElement& a, const WeylElement& b);

  /// k-fold product; pow(0) is the unit.
  WeylElement pow(int k) const;

  friend bool operator==(const WeylElement& a, const WeylElement& b) {
    return a.terms_ == b.terms_;
  }

  /// Weighted degree of a monomial x^m y^n is m - n.  Returns the common value
  /// when every stored monomial agrees, std::nullopt otherwise.  The zero
  /// element has no degree and is rejected.
  std::optional<int> weighted_degree() const;

  /// True iff every monomial is balanced (x^n y^n), i.e. the element lies in
  /// the span of the balanced monomials; such elements are exactly the left
  /// multiplications preserving each weighted-degree class.
  bool homogeneity_preserving() const;

  /// Normal-form rendering such as "x^3 y^3 + 3 x^2 y^2 + x y"; terms are
  /// listed by descending total degree, then descending x power.
  std::string to_string() const;

 private:
  void prune(const WeylMonomial& key);
  std::map<WeylMonomial, Rat> terms_;
};

/// Evaluate a polynomial sum_k coeffs[k] * E^k at a Weyl element.
WeylElement evaluate_polynomial(const std::vector<Rat>& coeffs, const WeylElement& e);

/// Exact check that (xy)^m expands to sum_i S(m, i) x^i y^i for 1 <= m <= m_max.
bool normal_order_balanced_power_matches_stirling(int m_max);

/// Exact check of the push-through identities for D = xy and 1 <= m <= m_max:
///   D x^m = x^m D + m x^m              D y^m = y^m D - m y^m
///   p(D) x^m = x^m p(D + m)            p(D) y^m = y^m p(D - m)
///   x^m y^m = prod_{i=0}^{m-1} (D - i) y^m x^m = prod_{i=1}^{m} (D + i)
/// with a fixed family of test polynomials p of degree <= 4.
bool check_push_through_identities(int m_max);

/// Polynomial in a single commuting variable t with exact rational
/// coefficients; the concrete model of the Weyl algebra acts on these.
class TPoly {
 public:
  TPoly() = default;
  static TPoly t_power(int j);

  bool is_zero() const;
  int degree() const;  // -1 for zero
  const Rat& coeff(int k) const;
  void set_coeff(int k, const Rat& c);

  friend bool operator==(const TPoly& a, const TPoly& b);

 private:
  void trim();
  std::vector<Rat> coeffs_;
  static const Rat zero_;
};

/// Action of a Weyl element on a polynomial in t under the faithful model
/// x -> (multiplication by t), y -> d/dt.
TPoly model_apply(const WeylElement& a, const TPoly& p);

}  // namespace ouk
