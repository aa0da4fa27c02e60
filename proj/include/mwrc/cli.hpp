#pragma once

#include "mwrc/sweeps.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace mwrc::cli {

enum class Command { Rate, EeSolve, Sweep, Crossing };

/// Everything one invocation needs. Unset optionals fall back to per-command
/// defaults when the run starts.
struct RunConfig {
  Command command = Command::Rate;
  std::vector<Scheme> schemes;
  ChannelParams channel{1.0, 1.0, 1.0, 1.0};
  PowerModel power;
  double pmax = 10.0;
  /// Defaults to pmax.
  std::optional<double> p0max;
  /// Defaults to P0max / 2.
  std::optional<double> p0_init;
  SweepKind kind = SweepKind::SpectralVsSnr;
  std::optional<double> from;
  std::optional<double> to;
  std::optional<double> step;
  SolverSettings settings;
  std::string out;
  TableFormat format = TableFormat::Dat;

  /// Throws ConfigError when any field breaks its domain invariant.
  void validate() const;

  friend bool operator==(const RunConfig &, const RunConfig &) = default;
};

/// JSON object keyed by long flag names ("p0max", "tol-am", ...).
std::string save_config(const RunConfig &cfg);
/// Inverse of save_config; unknown keys are a ConfigError.
RunConfig load_config(const std::string &text);

/// Parses argv (argv[0] is the program name). A --config file is applied
/// first and explicit flags override it. Throws ConfigError on bad input.
/// Returns nullopt after printing help to `out`.
std::optional<RunConfig> parse_command_line(int argc, const char *const *argv,
                                            std::ostream &out);

/// Executes the configured command and writes its artifact to cfg.out (or
/// `out` when empty). Throws ConfigError, DomainError or NonConvergence.
void run(const RunConfig &cfg, std::ostream &out);

/// parse + run with exit codes: 0 success, 2 usage/config error, 3 solver
/// non-convergence, 1 anything else. Failures print one JSON line to `err`.
int main_entry(int argc, const char *const *argv, std::ostream &out,
               std::ostream &err);

} // namespace mwrc::cli
