#pragma once

#include "mwrc/dinkelbach.hpp"
#include "mwrc/ee_model.hpp"

#include <optional>
#include <vector>

namespace mwrc {

/// Feasible powers [0, Pmax] x [0, P0max]. A zero side is allowed and yields
/// the zero-power solution.
struct BoxDomain {
  double Pmax = 1.0;
  double P0max = 1.0;

  void validate() const;
  bool degenerate() const { return Pmax == 0.0 || P0max == 0.0; }

  friend bool operator==(const BoxDomain &, const BoxDomain &) = default;
};

struct OptResult {
  double P_opt = 0.0;
  double P0_opt = 0.0;
  double ee_value = 0.0;
  /// EE1: the multipliers of the single Dinkelbach run. EE2: the terminal
  /// multiplier of every subproblem in solve order (the half-step EE values).
  std::vector<double> lambda_trace;
  /// EE1: Dinkelbach iterations. EE2: alternating-maximization rounds.
  int outer_iterations = 0;
  bool converged = false;
  /// EE after each alternating round (EE2 only).
  std::vector<double> ee_trace;
  /// Every Dinkelbach run performed, in order.
  std::vector<DinkelbachResult> subproblems;
};

/// Maximizes min{a1 C(alpha1 P0/N), a2 C(alpha2 P/N0)} / P_t over the box.
///
/// At an optimum both rate terms are equal (slack power only raises P_t), so
/// the search runs over the common rate t in [0, t_max]. The powers that meet
/// t with equality are P(t) = N0/alpha2 (2^(t/a2) - 1) and
/// P0(t) = N/alpha1 (2^(t/a1) - 1), which makes the problem t / P_t(t) with a
/// linear numerator and a convex denominator.
OptResult solve_ee1(const Ee1Form &form, const PowerModel &m,
                    const BoxDomain &box, const SolverSettings &settings = {});

/// Alternating maximization over P and P0. Each block update is a concave /
/// affine fractional program solved globally by dinkelbach(); the loop stops
/// when successive EE values differ by at most settings.am_tol.
OptResult solve_ee2(const Ee2Form &form, const PowerModel &m,
                    const BoxDomain &box, const SolverSettings &settings,
                    double P0_init);

/// Dispatches to solve_ee1 / solve_ee2. P0_init defaults to P0max / 2.
OptResult solve_ee(Scheme s, double N, double N0, const PowerModel &m,
                   const BoxDomain &box, const SolverSettings &settings = {},
                   std::optional<double> P0_init = std::nullopt);

/// Exhaustive search of eval_ee over an n x n uniform grid on the box,
/// endpoints included. Ties go to the smallest P, then the smallest P0.
OptResult grid_oracle(Scheme s, double N, double N0, const PowerModel &m,
                      const BoxDomain &box, int n_per_axis);

} // namespace mwrc
