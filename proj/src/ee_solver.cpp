#include "mwrc/ee_solver.hpp"

#include "mwrc/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace mwrc {

namespace {

OptResult zero_power_result() {
  OptResult r;
  r.converged = true;
  return r;
}

// Power needed for prefactor * C(gain * power / noise) to reach rate t.
double power_for_rate(double t, double prefactor, double gain, double noise) {
  return noise / gain * std::expm1(t / prefactor * std::numbers::ln2);
}

} // namespace

void BoxDomain::validate() const {
  if (!std::isfinite(Pmax) || !std::isfinite(P0max) || Pmax < 0.0 ||
      P0max < 0.0)
    throw DomainError("box: maximum powers must be finite and non-negative");
}

OptResult solve_ee1(const Ee1Form &form, const PowerModel &m,
                    const BoxDomain &box, const SolverSettings &settings) {
  form.validate();
  m.validate();
  box.validate();
  settings.validate();

  const double t_max =
      box.degenerate() ? 0.0
                       : std::min(form.relay_rate(box.P0max), form.user_rate(box.Pmax));
  if (!(t_max > 0.0))
    return zero_power_result();

  auto user_power = [&](double t) {
    return std::min(power_for_rate(t, form.a2, form.alpha2, form.N0), box.Pmax);
  };
  auto relay_power = [&](double t) {
    return std::min(power_for_rate(t, form.a1, form.alpha1, form.N), box.P0max);
  };

  DinkelbachResult run = dinkelbach(
      [](double t) { return t; },
      [&](double t) { return total_power(user_power(t), relay_power(t), m); },
      0.0, t_max, settings);

  OptResult r;
  r.P_opt = user_power(run.x);
  r.P0_opt = relay_power(run.x);
  r.ee_value = form.rate(r.P_opt, r.P0_opt) / total_power(r.P_opt, r.P0_opt, m);
  r.lambda_trace = run.lambda_trace;
  r.outer_iterations = run.iterations;
  r.converged = run.converged;
  r.subproblems.push_back(std::move(run));
  return r;
}

OptResult solve_ee2(const Ee2Form &form, const PowerModel &m,
                    const BoxDomain &box, const SolverSettings &settings,
                    double P0_init) {
  form.validate();
  m.validate();
  box.validate();
  settings.validate();
  if (!std::isfinite(P0_init) || P0_init < 0.0 || P0_init > box.P0max)
    throw DomainError("solve_ee2: P0_init must lie in [0, P0max]");
  if (box.degenerate())
    return zero_power_result();

  auto objective = [&](double P, double P0) {
    return form.rate(P, P0) / total_power(P, P0, m);
  };

  OptResult r;
  double P = 0.0;
  double P0 = P0_init;
  double previous = -std::numeric_limits<double>::infinity();
  bool subproblems_ok = true;

  for (int round = 1; round <= settings.max_outer_iters; ++round) {
    DinkelbachResult user = dinkelbach(
        [&](double x) { return form.rate(x, P0); },
        [&](double x) { return total_power(x, P0, m); }, 0.0, box.Pmax,
        settings);
    P = user.x;
    subproblems_ok = subproblems_ok && user.converged;
    r.lambda_trace.push_back(user.value);
    r.subproblems.push_back(std::move(user));

    DinkelbachResult relay = dinkelbach(
        [&](double x) { return form.rate(P, x); },
        [&](double x) { return total_power(P, x, m); }, 0.0, box.P0max,
        settings);
    P0 = relay.x;
    subproblems_ok = subproblems_ok && relay.converged;
    r.lambda_trace.push_back(relay.value);
    r.subproblems.push_back(std::move(relay));

    const double ee = objective(P, P0);
    r.ee_trace.push_back(ee);
    r.outer_iterations = round;
    if (std::abs(ee - previous) <= settings.am_tol) {
      r.converged = subproblems_ok;
      break;
    }
    previous = ee;
  }

  r.P_opt = P;
  r.P0_opt = P0;
  r.ee_value = objective(P, P0);
  return r;
}

OptResult solve_ee(Scheme s, double N, double N0, const PowerModel &m,
                   const BoxDomain &box, const SolverSettings &settings,
                   std::optional<double> P0_init) {
  if (is_ee1_scheme(s))
    return solve_ee1(ee1_form_for(s, N, N0), m, box, settings);
  return solve_ee2(ee2_form_for(s, N, N0), m, box, settings,
                   P0_init.value_or(box.P0max / 2.0));
}

OptResult grid_oracle(Scheme s, double N, double N0, const PowerModel &m,
                      const BoxDomain &box, int n_per_axis) {
  if (n_per_axis < 2)
    throw DomainError("grid_oracle: need at least 2 points per axis");
  box.validate();
  m.validate();

  const double step_P = box.Pmax / (n_per_axis - 1);
  const double step_P0 = box.P0max / (n_per_axis - 1);

  OptResult best;
  best.ee_value = -1.0;
  for (int i = 0; i < n_per_axis; ++i) {
    const double P = i == n_per_axis - 1 ? box.Pmax : i * step_P;
    for (int j = 0; j < n_per_axis; ++j) {
      const double P0 = j == n_per_axis - 1 ? box.P0max : j * step_P0;
      const double ee = eval_ee(s, {P, P0, N, N0}, m);
      if (ee > best.ee_value) {
        best.ee_value = ee;
        best.P_opt = P;
        best.P0_opt = P0;
      }
    }
  }
  best.converged = true;
  return best;
}

} // namespace mwrc
