#include "ouk/weyl.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "ouk/combinatorics.hpp"

namespace ouk {

WeylElement WeylElement::constant(const Rat& c) { return monomial(0, 0, c); }

WeylElement WeylElement::monomial(int x_pow, int y_pow, const Rat& coeff) {
  if (x_pow < 0 || y_pow < 0)
    throw std::invalid_argument("WeylElement: exponents must be >= 0");
  WeylElement e;
  if (coeff != 0) e.terms_[{x_pow, y_pow}] = coeff;
  return e;
}

void WeylElement::prune(const WeylMonomial& key) {
  auto it = terms_.find(key);
  if (it != terms_.end() && it->second == 0) terms_.erase(it);
}

WeylElement& WeylElement::operator+=(const WeylElement& rhs) {
  for (const auto& [mono, c] : rhs.terms_) {
    terms_[mono] += c;
    prune(mono);
  }
  return *this;
}

WeylElement& WeylElement::operator-=(const WeylElement& rhs) {
  for (const auto& [mono, c] : rhs.terms_) {
    terms_[mono] -= c;
    prune(mono);
  }
  return *this;
}

WeylElement operator*(const Rat& c, const WeylElement& a) {
  WeylElement r;
  if (c == 0) return r;
  for (const auto& [mono, coeff] : a.terms_) r.terms_[mono] = c * coeff;
  return r;
}

WeylElement operator*(const WeylElement& a, const WeylElement& b) {
  WeylElement r;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      // (x^a1 y^b1)(x^a2 y^b2): reorder the middle block y^b1 x^a2.
      const int b1 = ma.y_pow, a2 = mb.x_pow;
      const int kmax = b1 < a2 ? b1 : a2;
      const Rat cc = ca * cb;
      for (int k = 0; k <= kmax; ++k) {
        Int swaps = factorial(k) * binomial(b1, k) * binomial(a2, k);
        WeylMonomial mono{ma.x_pow + a2 - k, mb.y_pow + b1 - k};
        r.terms_[mono] += cc * Rat(swaps);
        r.prune(mono);
      }
    }
  }
  return r;
}

WeylElement WeylElement::pow(int k) const {
  if (k < 0) throw std::invalid_argument("WeylElement::pow: exponent must be >= 0");
  WeylElement r = one();
  for (int i = 0; i < k; ++i) r = r * (*this);
  return r;
}

std::optional<int> WeylElement::weighted_degree() const {
  if (terms_.empty())
    throw std::invalid_argument("weighted_degree: undefined for the zero element");
  std::optional<int> deg;
  for (const auto& [mono, c] : terms_) {
    int d = mono.x_pow - mono.y_pow;
    if (!deg) deg = d;
    else if (*deg != d) return std::nullopt;
  }
  return deg;
}

bool WeylElement::homogeneity_preserving() const {
  for (const auto& [mono, c] : terms_)
    if (mono.x_pow != mono.y_pow) return false;
  return true;
}

std::string WeylElement::to_string() const {
  if (terms_.empty()) return "0";
  // Descending total degree, then descending x power.
  std::vector<std::pair<WeylMonomial, Rat>> sorted(terms_.begin(), terms_.end());
  std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
    int ta = a.first.x_pow + a.first.y_pow, tb = b.first.x_pow + b.first.y_pow;
    if (ta != tb) return ta > tb;
    return a.first.x_pow > b.first.x_pow;
  });
  std::ostringstream os;
  bool first = true;
  for (const auto& [mono, c] : sorted) {
    Rat mag = c < 0 ? Rat(-c) : c;
    if (first) {
      if (c < 0) os << "- ";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    bool has_vars = mono.x_pow > 0 || mono.y_pow > 0;
    if (mag != 1 || !has_vars) {
      os << mag.str();
      if (has_vars) os << " ";
    }
    if (mono.x_pow > 0) {
      os << "x";
      if (mono.x_pow > 1) os << "^" << mono.x_pow;
      if (mono.y_pow > 0) os << " ";
    }
    if (mono.y_pow > 0) {
      os << "y";
      if (mono.y_pow > 1) os << "^" << mono.y_pow;
    }
  }
  return os.str();
}

WeylElement evaluate_polynomial(const std::vector<Rat>& coeffs, const WeylElement& e) {
  WeylElement r;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
    r = r * e + WeylElement::constant(*it);
  return r;
}

bool normal_order_balanced_power_matches_stirling(int m_max) {
  if (m_max < 1) throw std::invalid_argument("m_max must be >= 1");
  const WeylElement d = WeylElement::x() * WeylElement::y();
  for (int m = 1; m <= m_max; ++m) {
    WeylElement expected;
    for (int i = 1; i <= m; ++i)
      expected += WeylElement::monomial(i, i, Rat(stirling2(m, i)));
    if (!(d.pow(m) == expected)) return false;
  }
  return true;
}

namespace {

std::vector<std::vector<Rat>> test_polynomials() {
  // Degrees 0 through 4, with rational coefficients in the mix.
  return {
      {Rat(1)},
      {Rat(0), Rat(1)},
      {Rat(0), Rat(0), Rat(1)},
      {Rat(0), Rat(0), Rat(0), Rat(1)},
      {Rat(0), Rat(0), Rat(0), Rat(0), Rat(1)},
      {Rat(-2), Rat(1, 2), Rat(-3), Rat(0), Rat(1)},
      {Rat(2), Rat(-3), Rat(1)},
  };
}

// p(E + shift) as a polynomial coefficient substitution.
WeylElement evaluate_shifted(const std::vector<Rat>& coeffs, const WeylElement& e, int shift) {
  return evaluate_polynomial(coeffs, e + WeylElement::constant(shift));
}

}  // namespace

bool check_push_through_identities(int m_max) {
  if (m_max < 1) throw std::invalid_argument("m_max must be >= 1");
  const WeylElement X = WeylElement::x(), Y = WeylElement::y();
  const WeylElement D = X * Y;
  const auto polys = test_polynomials();
  for (int m = 1; m <= m_max; ++m) {
    const WeylElement xm = WeylElement::x(m), ym = WeylElement::y(m);
    if (!(D * xm == xm * D + Rat(m) * xm)) return false;
    if (!(D * ym == ym * D - Rat(m) * ym)) return false;
    for (const auto& p : polys) {
      if (!(evaluate_polynomial(p, D) * xm == xm * evaluate_shifted(p, D, m))) return false;
      if (!(evaluate_polynomial(p, D) * ym == ym * evaluate_shifted(p, D, -m))) return false;
    }
    WeylElement down = WeylElement::one(), up = WeylElement::one();
    for (int i = 0; i <= m - 1; ++i) down = down * (D - WeylElement::constant(i));
    for (int i = 1; i <= m; ++i) up = up * (D + WeylElement::constant(i));
    if (!(xm * ym == down)) return false;
    if (!(ym * xm == up)) return false;
  }
  return true;
}

const Rat TPoly::zero_ = Rat(0);

TPoly TPoly::t_power(int j) {
  if (j < 0) throw std::invalid_argument("TPoly::t_power: j must be >= 0");
  TPoly p;
  p.coeffs_.assign(j + 1, Rat(0));
  p.coeffs_[j] = 1;
  return p;
}

bool TPoly::is_zero() const { return coeffs_.empty(); }

int TPoly::degree() const { return static_cast<int>(coeffs_.size()) - 1; }

const Rat& TPoly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return zero_;
  return coeffs_[k];
}

void TPoly::set_coeff(int k, const Rat& c) {
  if (k < 0) throw std::invalid_argument("TPoly::set_coeff: k must be >= 0");
  if (k >= static_cast<int>(coeffs_.size())) coeffs_.resize(k + 1, Rat(0));
  coeffs_[k] = c;
  trim();
}

void TPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

bool operator==(const TPoly& a, const TPoly& b) { return a.coeffs_ == b.coeffs_; }

TPoly model_apply(const WeylElement& a, const TPoly& p) {
  TPoly out;
  for (const auto& [mono, c] : a.terms()) {
    // x^m y^n acting on t^k gives (k)_n t^(k - n + m).
    for (int k = 0; k <= p.degree(); ++k) {
      if (p.coeff(k) == 0 || mono.y_pow > k) continue;
      int target = k - mono.y_pow + mono.x_pow;
      Rat add = c * p.coeff(k) * Rat(falling_factorial(k, mono.y_pow));
      out.set_coeff(target, out.coeff(target) + add);
    }
  }
  return out;
}

}  // namespace ouk
