#pragma once

// Test-only reference computations. Nothing here calls the solvers under
// test, so agreement is an independent check.

#include "mwrc/ee_model.hpp"

#include <cmath>
#include <functional>
#include <random>

namespace mwrc::testing {

/// Seeded generator for property-style tests.
class ParamGen {
public:
  explicit ParamGen(std::uint64_t seed) : rng_(seed) {}

  double log_uniform(double lo, double hi) {
    std::uniform_real_distribution<double> u(std::log(lo), std::log(hi));
    return std::exp(u(rng_));
  }
  double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng_);
  }
  ChannelParams channel(double lo = 1e-3, double hi = 1e3) {
    return {log_uniform(lo, hi), log_uniform(lo, hi), log_uniform(lo, hi),
            log_uniform(lo, hi)};
  }

private:
  std::mt19937_64 rng_;
};

/// Best of f over n + 1 uniform samples of [lo, hi].
inline std::pair<double, double> dense_line_search(
    const std::function<double(double)> &f, double lo, double hi, long n) {
  double best_x = lo, best = f(lo);
  for (long i = 1; i <= n; ++i) {
    const double x = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n);
    const double v = f(x);
    if (v > best) {
      best = v;
      best_x = x;
    }
  }
  return {best_x, best};
}

/// Two-sided difference where possible; one-sided (inward) at a bound.
/// Returns {derivative, at_lower, at_upper}.
struct Partial {
  double value;
  bool at_lower;
  bool at_upper;
};

inline Partial partial_derivative(const std::function<double(double)> &f,
                                  double x, double lo, double hi, double h) {
  if (x - h < lo)
    return {(f(x + h) - f(x)) / h, true, false};
  if (x + h > hi)
    return {(f(x) - f(x - h)) / h, false, true};
  return {(f(x + h) - f(x - h)) / (2.0 * h), false, false};
}

/// Stationarity on a box coordinate: |df| small inside, no ascent direction
/// pointing into the box at a bound.
inline bool stationary(const Partial &d, double tol) {
  if (d.at_lower)
    return d.value <= tol;
  if (d.at_upper)
    return d.value >= -tol;
  return std::abs(d.value) <= tol;
}

} // namespace mwrc::testing
