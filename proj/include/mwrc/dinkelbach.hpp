#pragma once

#include <cmath>
#include <functional>
#include <vector>

namespace mwrc {

/// Tolerances and iteration caps shared by every solver.
struct SolverSettings {
  /// Absolute tolerance on F(lambda) = max_x f(x) - lambda g(x).
  double dinkelbach_tol = 1e-10;
  /// Absolute tolerance on successive EE values of the alternating loop.
  double am_tol = 1e-8;
  /// Golden-section stopping width, relative to the search interval.
  double inner_tol = 1e-10;
  int max_outer_iters = 50;
  int max_inner_iters = 200;

  void validate() const;

  friend bool operator==(const SolverSettings &, const SolverSettings &) = default;
};

struct ScalarMax {
  double x = 0.0;
  double value = 0.0;
};

/// Maximizes a unimodal (e.g. concave) function on [lo, hi]. The interval is
/// shrunk until it is narrower than rel_tol * (hi - lo); the endpoints are
/// compared against the interior estimate so boundary optima are exact. Ties
/// resolve to the smaller x.
template <typename F>
ScalarMax golden_section_max(F &&f, double lo, double hi, double rel_tol,
                             int max_iters) {
  static const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  const double width_tol = rel_tol * (hi - lo);

  double a = lo, b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c), fd = f(d);
  for (int i = 0; i < max_iters && (b - a) > width_tol; ++i) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }

  ScalarMax best{lo, f(lo)};
  const ScalarMax inner = fc >= fd ? ScalarMax{c, fc} : ScalarMax{d, fd};
  if (inner.value > best.value)
    best = inner;
  const double fhi = f(hi);
  if (fhi > best.value)
    best = {hi, fhi};
  return best;
}

struct DinkelbachResult {
  double x = 0.0;
  /// numerator(x) / denominator(x).
  double value = 0.0;
  /// lambda_0 = 0, then f(x_n) / g(x_n) after each non-terminal step.
  std::vector<double> lambda_trace;
  /// F(lambda) at the last multiplier.
  double residual = 0.0;
  /// Number of parametric subproblems solved.
  int iterations = 0;
  bool converged = false;
};

/// Maximizes numerator(x) / denominator(x) over [lo, hi] with Dinkelbach's
/// parametric method. numerator must be concave and non-negative, denominator
/// convex and positive; each parametric subproblem is solved by golden-section
/// search. Throws DomainError if lo >= hi or the denominator is probed <= 0.
DinkelbachResult dinkelbach(const std::function<double(double)> &numerator,
                            const std::function<double(double)> &denominator,
                            double lo, double hi,
                            const SolverSettings &settings = {});

} // namespace mwrc
