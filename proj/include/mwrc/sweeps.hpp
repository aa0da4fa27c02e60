#pragma once

#include "mwrc/ee_solver.hpp"
#include "mwrc/table.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace mwrc {

enum class SweepKind {
  /// Sum rate vs symmetric SNR (dB), P = P0 = S * N.
  SpectralVsSnr,
  /// Optimized EE vs Pmax = P0max (dB relative to N).
  EeVsPmax,
  /// Optimized EE of the first scheme vs its circuit power (W); the other
  /// schemes stay at the reference circuit power `power.Pc`.
  EeVsCircuitPower,
};

struct SweepSpec {
  SweepKind kind = SweepKind::SpectralVsSnr;
  double x_start = -20.0;
  double x_stop = 40.0;
  double x_step = 0.1;
  std::vector<Scheme> schemes;
  double N = 1.0;
  double N0 = 1.0;
  PowerModel power;
  /// Operating point of the circuit-power sweep.
  BoxDomain box{10.0, 10.0};
  SolverSettings settings;

  void validate() const;
};

/// Grids and scheme columns used for the published figures: -20:0.1:40 dB,
/// -30:0.1:10 dB and 1:0.5:50 W, with unit noise, phi = 3, psi = 1, Pc = 1 W.
SweepSpec default_sweep_spec(SweepKind kind);

/// start, start + step, ... up to stop (inclusive within step * 1e-9).
std::vector<double> sweep_grid(double start, double stop, double step);

std::string column_label(SweepKind kind, Scheme s);
std::string x_label(SweepKind kind);

/// Value of one scheme's column at an arbitrary sweep-variable value.
/// Throws NonConvergence if an EE solve does not converge.
double sweep_point(const SweepSpec &spec, Scheme s, double x);

SweepTable spectral_sweep(const SweepSpec &spec);
SweepTable ee_sweep(const SweepSpec &spec);
SweepTable circuit_power_sweep(const SweepSpec &spec);
/// Dispatches on spec.kind.
SweepTable run_sweep(const SweepSpec &spec);

/// x -> sweep_point(spec, a, x) - sweep_point(spec, b, x).
std::function<double(double)> sweep_difference(const SweepSpec &spec, Scheme a,
                                               Scheme b);

struct Crossing {
  double x_cross = 0.0;
  std::string left_label;
  std::string right_label;
  bool refined = false;
};

/// First sign change of column_a - column_b along the table. With `refine`
/// the bracket is bisected on that function down to 1e-6 in x; otherwise the
/// crossing is linearly interpolated. Returns nullopt when the difference
/// never changes sign.
std::optional<Crossing>
find_crossing(const SweepTable &t, std::string_view column_a,
              std::string_view column_b,
              const std::function<double(double)> &refine = {});

struct Saturation {
  double x = 0.0;
  /// False when the column is still moving at the last grid point.
  bool saturated = false;
};

/// Smallest grid x from which the column stays within rel_tol (relative) of
/// its final value. Throws DomainError if the column decreases by more than
/// that tolerance anywhere.
Saturation detect_saturation(const SweepTable &t, std::string_view column,
                             double rel_tol = 1e-6);

} // namespace mwrc
