#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

#include "ouk/exact.hpp"

namespace ouk {

/// order-th derivative of f at `at` by central differencing with Richardson
/// extrapolation.  Level r uses step/2^r; the extrapolation removes the even
/// error terms up to h^(2*levels - 2).
template <typename F>
double central_derivative(F&& f, double at, int order, double step, int levels = 3) {
  if (order < 0) throw std::invalid_argument("central_derivative: order must be >= 0");
  if (step <= 0) throw std::invalid_argument("central_derivative: step must be > 0");
  if (levels < 1) throw std::invalid_argument("central_derivative: levels must be >= 1");
  if (order == 0) return f(at);

  std::vector<double> weights(order + 1);
  for (int i = 0; i <= order; ++i) {
    weights[i] = to_double(binomial(order, i));
    if (i % 2 == 1) weights[i] = -weights[i];
  }

  auto stencil = [&](double h) {
    double acc = 0.0;
    for (int i = 0; i <= order; ++i) acc += weights[i] * f(at + (0.5 * order - i) * h);
    double hp = 1.0;
    for (int i = 0; i < order; ++i) hp *= h;
    return acc / hp;
  };

  std::vector<double> row(levels);
  for (int r = 0; r < levels; ++r) {
    row[r] = stencil(step / static_cast<double>(1 << r));
  }
  // Richardson in h^2: T[r][s] = (4^s T[r][s-1] - T[r-1][s-1]) / (4^s - 1).
  for (int s = 1; s < levels; ++s) {
    double p = std::pow(4.0, s);
    for (int r = levels - 1; r >= s; --r) row[r] = (p * row[r] - row[r - 1]) / (p - 1.0);
  }
  return row[levels - 1];
}

}  // namespace ouk
