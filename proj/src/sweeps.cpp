#include "mwrc/sweeps.hpp"

#include "mwrc/errors.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <optional>
#include <sstream>
#include <thread>

namespace mwrc {

namespace {

// Runs body(i) for i in [0, n) on up to hardware_concurrency threads. Each
// index is written by exactly one thread, so results stay in grid order.
template <typename Body> void parallel_for(std::size_t n, Body body) {
  const std::size_t workers = std::min<std::size_t>(
      n, std::max(1u, std::thread::hardware_concurrency()));
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i)
      body(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w)
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < n; i += workers)
        body(i);
    });
  for (std::thread &t : pool)
    t.join();
}

double solved_ee(const SweepSpec &spec, Scheme s, const PowerModel &pm,
                 const BoxDomain &box, double x) {
  const OptResult r = solve_ee(s, spec.N, spec.N0, pm, box, spec.settings);
  if (!r.converged) {
    std::ostringstream msg;
    msg << "EE solver for " << scheme_name(s) << " did not converge at x = "
        << format_number(x);
    throw NonConvergence(msg.str());
  }
  return r.ee_value;
}

void require_kind(const SweepSpec &spec, SweepKind kind) {
  if (spec.kind != kind)
    throw ConfigError("sweep spec kind does not match the requested sweep");
}

SweepTable tabulate(const SweepSpec &spec) {
  spec.validate();
  const std::vector<double> grid =
      sweep_grid(spec.x_start, spec.x_stop, spec.x_step);

  SweepTable t;
  t.x_label = x_label(spec.kind);
  for (Scheme s : spec.schemes)
    t.column_labels.push_back(column_label(spec.kind, s));
  t.rows.resize(grid.size());

  // Circuit-power reference columns do not depend on x.
  std::vector<std::optional<double>> constant(spec.schemes.size());
  if (spec.kind == SweepKind::EeVsCircuitPower)
    for (std::size_t k = 1; k < spec.schemes.size(); ++k)
      constant[k] = sweep_point(spec, spec.schemes[k], grid.front());

  std::vector<std::string> failures(grid.size());
  std::vector<std::exception_ptr> errors(grid.size());
  parallel_for(grid.size(), [&](std::size_t i) {
    SweepRow &row = t.rows[i];
    row.x = grid[i];
    row.values.resize(spec.schemes.size());
    try {
      for (std::size_t k = 0; k < spec.schemes.size(); ++k)
        row.values[k] = constant[k] ? *constant[k]
                                    : sweep_point(spec, spec.schemes[k], grid[i]);
    } catch (const NonConvergence &e) {
      failures[i] = e.what();
    } catch (...) {
      errors[i] = std::current_exception();
    }
  });

  for (const std::exception_ptr &e : errors)
    if (e)
      std::rethrow_exception(e);

  std::string failed;
  for (const std::string &f : failures)
    if (!f.empty())
      failed += (failed.empty() ? "" : "; ") + f;
  if (!failed.empty())
    throw NonConvergence(failed);
  return t;
}

} // namespace

void SweepSpec::validate() const {
  if (!std::isfinite(x_start) || !std::isfinite(x_stop) || !(x_start < x_stop))
    throw ConfigError("sweep: need x_start < x_stop");
  if (!std::isfinite(x_step) || !(x_step > 0.0))
    throw ConfigError("sweep: x_step must be positive");
  if (schemes.empty())
    throw ConfigError("sweep: at least one scheme is required");
  if (kind == SweepKind::EeVsCircuitPower && !(x_start > 0.0))
    throw ConfigError("sweep: circuit power grid must be positive");
  try {
    ChannelParams{0.0, 0.0, N, N0}.validate();
    power.validate();
    box.validate();
    settings.validate();
  } catch (const DomainError &e) {
    throw ConfigError(std::string("sweep: ") + e.what());
  }
}

SweepSpec default_sweep_spec(SweepKind kind) {
  SweepSpec spec;
  spec.kind = kind;
  switch (kind) {
  case SweepKind::SpectralVsSnr:
    spec.x_start = -20.0;
    spec.x_stop = 40.0;
    spec.x_step = 0.1;
    spec.schemes = {Scheme::OuterBound, Scheme::NncSnd, Scheme::DF, Scheme::AF,
                    Scheme::NncIan};
    break;
  case SweepKind::EeVsPmax:
    spec.x_start = -30.0;
    spec.x_stop = 10.0;
    spec.x_step = 0.1;
    spec.schemes = {Scheme::OuterBound, Scheme::NncSnd, Scheme::DF, Scheme::AF,
                    Scheme::NncIan};
    break;
  case SweepKind::EeVsCircuitPower:
    spec.x_start = 1.0;
    spec.x_stop = 50.0;
    spec.x_step = 0.5;
    spec.schemes = {Scheme::DF, Scheme::AF};
    break;
  }
  return spec;
}

std::vector<double> sweep_grid(double start, double stop, double step) {
  if (!(start < stop) || !(step > 0.0))
    throw ConfigError("sweep grid: need start < stop and step > 0");
  const auto n = static_cast<std::size_t>(
      std::floor((stop - start) / step + 1e-9));
  std::vector<double> grid;
  grid.reserve(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    const double raw = start + static_cast<double>(i) * step;
    // Snap accumulated representation error (8.100000000000001 -> 8.1).
    const double snapped = std::round(raw * 1e10) / 1e10;
    grid.push_back(std::abs(snapped - raw) < step * 1e-6 ? snapped : raw);
  }
  return grid;
}

std::string column_label(SweepKind kind, Scheme s) {
  if (kind == SweepKind::SpectralVsSnr) {
    switch (s) {
    case Scheme::OuterBound:
      return "bound";
    case Scheme::AF:
      return "af";
    case Scheme::DF:
      return "df";
    case Scheme::NncSnd:
      return "nnc_snd";
    case Scheme::NncIan:
      return "nnc_ifn";
    }
  }
  switch (s) {
  case Scheme::OuterBound:
    return "Outer_Bound";
  case Scheme::AF:
    return "AF";
  case Scheme::DF:
    return "DF";
  case Scheme::NncSnd:
    return "NNC_SND";
  case Scheme::NncIan:
    return "NNC_IFN";
  }
  return "?";
}

std::string x_label(SweepKind kind) {
  switch (kind) {
  case SweepKind::SpectralVsSnr:
    return "snr";
  case SweepKind::EeVsPmax:
    return "Pmax";
  case SweepKind::EeVsCircuitPower:
    return "Pc";
  }
  return "x";
}

double sweep_point(const SweepSpec &spec, Scheme s, double x) {
  switch (spec.kind) {
  case SweepKind::SpectralVsSnr: {
    const double P = db_to_linear(x) * spec.N;
    return sum_rate(s, {P, P, spec.N, spec.N0});
  }
  case SweepKind::EeVsPmax: {
    const double Pmax = db_to_linear(x) * spec.N;
    return solved_ee(spec, s, spec.power, {Pmax, Pmax}, x);
  }
  case SweepKind::EeVsCircuitPower: {
    PowerModel pm = spec.power;
    if (!spec.schemes.empty() && s == spec.schemes.front())
      pm.Pc = x;
    return solved_ee(spec, s, pm, spec.box, x);
  }
  }
  throw ConfigError("unknown sweep kind");
}

SweepTable spectral_sweep(const SweepSpec &spec) {
  require_kind(spec, SweepKind::SpectralVsSnr);
  return tabulate(spec);
}

SweepTable ee_sweep(const SweepSpec &spec) {
  require_kind(spec, SweepKind::EeVsPmax);
  return tabulate(spec);
}

SweepTable circuit_power_sweep(const SweepSpec &spec) {
  require_kind(spec, SweepKind::EeVsCircuitPower);
  return tabulate(spec);
}

SweepTable run_sweep(const SweepSpec &spec) { return tabulate(spec); }

std::function<double(double)> sweep_difference(const SweepSpec &spec, Scheme a,
                                               Scheme b) {
  return [spec, a, b](double x) {
    return sweep_point(spec, a, x) - sweep_point(spec, b, x);
  };
}

namespace {

// -1, 0 or +1; differences within 1e-12 relative of the operands are ties.
int sign_of(double a, double b) {
  const double d = a - b;
  if (std::abs(d) <= 1e-12 * std::max(std::abs(a), std::abs(b)))
    return 0;
  return d > 0.0 ? 1 : -1;
}

int sign_of(double d) { return d > 0.0 ? 1 : (d < 0.0 ? -1 : 0); }

} // namespace

std::optional<Crossing>
find_crossing(const SweepTable &t, std::string_view column_a,
              std::string_view column_b,
              const std::function<double(double)> &refine) {
  const std::size_t ka = t.column_index(column_a);
  const std::size_t kb = t.column_index(column_b);

  std::optional<std::size_t> last;
  int last_sign = 0;
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    const double a = t.rows[i].values[ka];
    const double b = t.rows[i].values[kb];
    const int s = sign_of(a, b);
    if (s == 0)
      continue;
    if (last && s != last_sign) {
      const SweepRow &lo_row = t.rows[*last];
      const SweepRow &hi_row = t.rows[i];
      Crossing c{0.0, std::string(column_a), std::string(column_b), false};

      double lo = lo_row.x, hi = hi_row.x;
      if (refine) {
        const int s_lo = sign_of(refine(lo));
        const int s_hi = sign_of(refine(hi));
        if (s_lo != 0 && s_hi != 0 && s_lo != s_hi) {
          while (hi - lo > 1e-6) {
            const double mid = 0.5 * (lo + hi);
            const int s_mid = sign_of(refine(mid));
            if (s_mid == 0) {
              lo = hi = mid;
              break;
            }
            (s_mid == s_lo ? lo : hi) = mid;
          }
          c.x_cross = 0.5 * (lo + hi);
          c.refined = true;
          return c;
        }
      }
      const double d_lo = lo_row.values[ka] - lo_row.values[kb];
      const double d_hi = hi_row.values[ka] - hi_row.values[kb];
      c.x_cross = lo + (hi - lo) * d_lo / (d_lo - d_hi);
      return c;
    }
    last = i;
    last_sign = s;
  }
  return std::nullopt;
}

Saturation detect_saturation(const SweepTable &t, std::string_view column,
                             double rel_tol) {
  if (!(rel_tol >= 0.0))
    throw DomainError("detect_saturation: rel_tol must be non-negative");
  const std::vector<double> v = t.column(column);
  if (v.empty())
    throw DomainError("detect_saturation: empty table");

  for (std::size_t i = 1; i < v.size(); ++i)
    if (v[i] < v[i - 1] - rel_tol * std::abs(v[i - 1])) {
      std::ostringstream msg;
      msg << "detect_saturation: column '" << column << "' decreases at x = "
          << format_number(t.rows[i].x);
      throw DomainError(msg.str());
    }

  const double final_value = v.back();
  const double band = rel_tol * std::abs(final_value);
  std::size_t k = v.size() - 1;
  while (k > 0 && std::abs(v[k - 1] - final_value) <= band)
    --k;
  return {t.rows[k].x, k < v.size() - 1 || v.size() == 1};
}

} // namespace mwrc
