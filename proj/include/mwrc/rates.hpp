#pragma once

// Closed-form sum rates of the symmetric 3-user multi-way relay channel with
// circular message exchange. All powers are linear (watts); rates are in
// bits per channel use.

#include <array>
#include <optional>
#include <string_view>

namespace mwrc {

/// One operating point: per-user power P, relay power P0, user noise N and
/// relay noise N0.
struct ChannelParams {
  double P = 0.0;
  double P0 = 0.0;
  double N = 1.0;
  double N0 = 1.0;

  /// Throws DomainError unless P, P0 >= 0 and N, N0 > 0 (all finite).
  void validate() const;

  friend bool operator==(const ChannelParams &, const ChannelParams &) = default;
};

enum class Scheme { OuterBound, AF, DF, NncSnd, NncIan };

inline constexpr std::array<Scheme, 5> kAllSchemes = {
    Scheme::OuterBound, Scheme::AF, Scheme::DF, Scheme::NncSnd, Scheme::NncIan};

/// Command-line spelling: bound, af, df, nnc-snd, nnc-ian.
std::string_view scheme_name(Scheme s);
std::optional<Scheme> parse_scheme(std::string_view name);

/// C(x) = log2(1 + x).
double capacity(double snr);

double outer_bound(const ChannelParams &p);
double af_sum_rate(const ChannelParams &p);
double df_sum_rate(const ChannelParams &p);
double nnc_snd_sum_rate(const ChannelParams &p);
double nnc_ian_sum_rate(const ChannelParams &p);

double sum_rate(Scheme s, const ChannelParams &p);

/// Largest symmetric SNR (P = P0, N = N0) at which DF meets the outer bound:
/// the positive root of S^2 - 6S - 3 = 0.
double df_optimality_threshold();

double db_to_linear(double db);
double linear_to_db(double linear);

} // namespace mwrc
