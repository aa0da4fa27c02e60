#include "mwrc/rates.hpp"

#include "mwrc/errors.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace mwrc {

void ChannelParams::validate() const {
  if (!std::isfinite(P) || !std::isfinite(P0) || !std::isfinite(N) ||
      !std::isfinite(N0))
    throw DomainError("channel parameters must be finite");
  if (P < 0.0 || P0 < 0.0)
    throw DomainError("transmit powers must be non-negative");
  if (N <= 0.0 || N0 <= 0.0)
    throw DomainError("noise powers must be strictly positive");
}

std::string_view scheme_name(Scheme s) {
  switch (s) {
  case Scheme::OuterBound:
    return "bound";
  case Scheme::AF:
    return "af";
  case Scheme::DF:
    return "df";
  case Scheme::NncSnd:
    return "nnc-snd";
  case Scheme::NncIan:
    return "nnc-ian";
  }
  return "?";
}

std::optional<Scheme> parse_scheme(std::string_view name) {
  for (Scheme s : kAllSchemes)
    if (scheme_name(s) == name)
      return s;
  return std::nullopt;
}

double capacity(double snr) {
  if (!std::isfinite(snr) || snr < 0.0)
    throw DomainError("capacity: SNR must be finite and non-negative, got " +
                      std::to_string(snr));
  return std::log2(1.0 + snr);
}

double outer_bound(const ChannelParams &p) {
  p.validate();
  return std::min(1.5 * capacity(p.P0 / p.N), 3.0 * capacity(p.P / p.N0));
}

double af_sum_rate(const ChannelParams &p) {
  p.validate();
  const double num = 3.0 * p.P * p.P0;
  const double den = p.N0 * p.P0 + 3.0 * p.P * p.N + p.N * p.N0;
  return capacity(num / den);
}

double df_sum_rate(const ChannelParams &p) {
  p.validate();
  return std::min(1.5 * capacity(p.P0 / p.N), capacity(3.0 * p.P / p.N0));
}

double nnc_snd_sum_rate(const ChannelParams &p) {
  p.validate();
  const double num = 2.0 * p.P * p.P0;
  const double den = p.N0 * p.P0 + 2.0 * p.P * p.N + p.N * p.N0;
  return 1.5 * capacity(num / den);
}

double nnc_ian_sum_rate(const ChannelParams &p) {
  p.validate();
  const double num = p.P * p.P0;
  const double den =
      2.0 * p.P * p.P0 + p.N0 * p.P0 + 3.0 * p.P * p.N + p.N * p.N0;
  return 3.0 * capacity(num / den);
}

double sum_rate(Scheme s, const ChannelParams &p) {
  switch (s) {
  case Scheme::OuterBound:
    return outer_bound(p);
  case Scheme::AF:
    return af_sum_rate(p);
  case Scheme::DF:
    return df_sum_rate(p);
  case Scheme::NncSnd:
    return nnc_snd_sum_rate(p);
  case Scheme::NncIan:
    return nnc_ian_sum_rate(p);
  }
  throw DomainError("unknown scheme");
}

double df_optimality_threshold() { return 3.0 + 2.0 * std::sqrt(3.0); }

double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

double linear_to_db(double linear) {
  if (!(linear > 0.0))
    throw DomainError("dB conversion needs a positive value");
  return 10.0 * std::log10(linear);
}

} // namespace mwrc
