#include <doctest.h>

#include "ouk/checks.hpp"
#include "ouk/combinatorics.hpp"
#include "ouk/weyl.hpp"

using namespace ouk;

namespace {
const WeylElement X = WeylElement::x();
const WeylElement Y = WeylElement::y();
}  // namespace

TEST_CASE("commutator rewrite: y x = x y + 1") {
  CHECK(Y * X == X * Y + WeylElement::one());
  CHECK(X * Y - Y * X == WeylElement::constant(-1));
}

TEST_CASE("normal-ordered products match hand expansions") {
  WeylElement d = X * Y;
  CHECK(d * d == WeylElement::monomial(2, 2, 1) + WeylElement::monomial(1, 1, 1));
  CHECK(WeylElement::monomial(2, 2, 1) * X ==
        WeylElement::monomial(3, 2, 1) + WeylElement::monomial(2, 1, 2));
  CHECK(WeylElement::monomial(0, 2, 1) * WeylElement::monomial(2, 0, 1) ==
        WeylElement::monomial(2, 2, 1) + WeylElement::monomial(1, 1, 4) +
            WeylElement::constant(2));
}

TEST_CASE("powers of xy and the empty product") {
  WeylElement d = X * Y;
  CHECK(d.pow(0) == WeylElement::one());
  CHECK(d.pow(1) == d);
  CHECK(d.pow(3) == WeylElement::monomial(3, 3, 1) + WeylElement::monomial(2, 2, 3) +
                        WeylElement::monomial(1, 1, 1));
  CHECK_THROWS_AS(d.pow(-1), std::invalid_argument);
}

TEST_CASE("balanced powers expand with Stirling coefficients up to m = 12") {
  CHECK(normal_order_balanced_power_matches_stirling(1));
  CHECK(normal_order_balanced_power_matches_stirling(8));
  CHECK(normal_order_balanced_power_matches_stirling(12));
}

TEST_CASE("push-through identities for D = xy") {
  CHECK(check_push_through_identities(1));
  CHECK(check_push_through_identities(6));
  CHECK(check_push_through_identities(10));
}

TEST_CASE("weighted degree") {
  CHECK(WeylElement::monomial(3, 3, 1).weighted_degree() == std::optional<int>(0));
  CHECK(WeylElement::monomial(2, 5, 1).weighted_degree() == std::optional<int>(-3));
  CHECK((WeylElement::monomial(2, 1, 1) + WeylElement::monomial(1, 2, 1)).weighted_degree() ==
        std::nullopt);
  CHECK_THROWS_AS(WeylElement().weighted_degree(), std::invalid_argument);
}

TEST_CASE("homogeneity-preserving elements are the balanced ones") {
  CHECK((X * Y + WeylElement::monomial(3, 3, 5)).homogeneity_preserving());
  CHECK_FALSE(WeylElement::monomial(2, 1, 1).homogeneity_preserving());
  CHECK((X * Y).pow(7).homogeneity_preserving());
  CHECK(check_homogeneity_classification());
}

TEST_CASE("ring axioms on sampled elements") {
  std::vector<WeylElement> sample = {
      X, Y, X * Y, WeylElement::monomial(6, 2, Rat(1, 3)),
      WeylElement::monomial(2, 6, -2) + WeylElement::constant(5),
      WeylElement::monomial(3, 3, Rat(7, 2)) + WeylElement::monomial(1, 0, 1),
      WeylElement::monomial(0, 4, 1) + WeylElement::monomial(4, 0, Rat(-1, 5))};
  for (const auto& a : sample)
    for (const auto& b : sample)
      for (const auto& c : sample) {
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a + b) * c == a * c + b * c);
      }
}

TEST_CASE("the polynomial model is a faithful representation") {
  std::vector<WeylElement> sample = {
      X, Y, X * Y, WeylElement::monomial(2, 1, 1),
      WeylElement::monomial(1, 2, Rat(1, 2)) + WeylElement::constant(3),
      (X * Y).pow(2), WeylElement::monomial(3, 3, 1)};
  for (const auto& a : sample)
    for (const auto& b : sample)
      for (int j = 0; j <= 8; ++j) {
        TPoly tj = TPoly::t_power(j);
        CHECK(model_apply(a * b, tj) == model_apply(a, model_apply(b, tj)));
      }
}

TEST_CASE("(xy)^N acts on t^j by the scalar j^N") {
  for (int N = 0; N <= 8; ++N)
    for (int j = 0; j <= 8; ++j) {
      TPoly expect;
      expect.set_coeff(j, Rat(int_pow(Int(j), N)));
      CHECK(model_apply((X * Y).pow(N), TPoly::t_power(j)) == expect);
    }
}

TEST_CASE("substituting falling factorials into the balanced expansion gives power sums") {
  for (int k = 0; k <= 12; ++k) {
    WeylElement p = (X * Y).pow(k);
    for (int j = 0; j <= 20; ++j) {
      Rat acc = 0;
      for (const auto& [mono, coeff] : p.terms()) {
        REQUIRE(mono.x_pow == mono.y_pow);
        acc += coeff * Rat(falling_factorial(j, mono.x_pow));
      }
      CHECK(acc == Rat(int_pow(Int(j), k)));
    }
  }
}

TEST_CASE("normal-form rendering") {
  CHECK(WeylElement().to_string() == "0");
  CHECK(WeylElement::one().to_string() == "1");
  CHECK((X * Y).pow(2).to_string() == "x^2 y^2 + x y");
  CHECK((WeylElement::monomial(1, 2, Rat(1, 2)) + WeylElement::constant(-2)).to_string() ==
        "1/2 x y^2 - 2");
  CHECK((WeylElement::monomial(0, 1, -1) + WeylElement::monomial(3, 0, 1)).to_string() ==
        "x^3 - y");
}

TEST_CASE("weyl verify suite passes") {
  CHECK(all_pass(weyl_suite()));
}
