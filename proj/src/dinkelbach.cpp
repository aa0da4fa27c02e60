#include "mwrc/dinkelbach.hpp"

#include "mwrc/errors.hpp"

#include <cmath>
#include <string>

namespace mwrc {

void SolverSettings::validate() const {
  if (!(dinkelbach_tol > 0.0) || !(am_tol > 0.0) || !(inner_tol > 0.0))
    throw DomainError("solver tolerances must be positive");
  if (max_outer_iters < 1 || max_inner_iters < 1)
    throw DomainError("solver iteration caps must be at least 1");
}

DinkelbachResult dinkelbach(const std::function<double(double)> &numerator,
                            const std::function<double(double)> &denominator,
                            double lo, double hi,
                            const SolverSettings &settings) {
  settings.validate();
  if (!(lo < hi) || !std::isfinite(lo) || !std::isfinite(hi))
    throw DomainError("dinkelbach: need a finite interval with lo < hi");

  auto checked_den = [&](double x) {
    const double g = denominator(x);
    if (!(g > 0.0))
      throw DomainError("dinkelbach: denominator must be positive, got " +
                        std::to_string(g) + " at x = " + std::to_string(x));
    return g;
  };

  DinkelbachResult out;
  double lambda = 0.0;
  out.lambda_trace.push_back(lambda);

  for (int it = 0; it < settings.max_outer_iters; ++it) {
    const ScalarMax inner = golden_section_max(
        [&](double x) { return numerator(x) - lambda * checked_den(x); }, lo,
        hi, settings.inner_tol, settings.max_inner_iters);

    const double fx = numerator(inner.x);
    const double gx = checked_den(inner.x);
    out.x = inner.x;
    out.value = fx / gx;
    out.residual = fx - lambda * gx;
    out.iterations = it + 1;

    if (std::abs(out.residual) <= settings.dinkelbach_tol) {
      out.converged = true;
      return out;
    }
    lambda = fx / gx;
    out.lambda_trace.push_back(lambda);
  }
  return out;
}

} // namespace mwrc
