#pragma once

#include "mwrc/rates.hpp"

namespace mwrc {

/// Consumed power P_t = phi * P + psi * P0 + Pc. phi aggregates the three
/// user amplifiers, psi is the relay amplifier, Pc is all circuit power.
struct PowerModel {
  double phi = 3.0;
  double psi = 1.0;
  double Pc = 1.0;

  /// Throws DomainError unless phi >= 3, psi >= 1 and Pc > 0.
  void validate() const;

  friend bool operator==(const PowerModel &, const PowerModel &) = default;
};

double total_power(double P, double P0, const PowerModel &m);

/// min{a1 C(alpha1 P0 / N), a2 C(alpha2 P / N0)}: outer bound and DF.
struct Ee1Form {
  double a1 = 0.0;
  double a2 = 0.0;
  double alpha1 = 0.0;
  double alpha2 = 0.0;
  double N = 1.0;
  double N0 = 1.0;

  void validate() const;
  double relay_rate(double P0) const { return a1 * capacity(alpha1 * P0 / N); }
  double user_rate(double P) const { return a2 * capacity(alpha2 * P / N0); }
  double rate(double P, double P0) const;
};

/// alpha C(P P0 / (d P P0 + a P + b P0 + c)): AF and both NNC decoders.
/// AF and NNC-SND have d = 0; the P * P0 interference term of NNC-IAN
/// needs d = 2.
struct Ee2Form {
  double alpha = 0.0;
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  double d = 0.0;

  void validate() const;
  double sinr(double P, double P0) const;
  double rate(double P, double P0) const { return alpha * capacity(sinr(P, P0)); }
};

/// Throws UnsupportedScheme for anything but OuterBound and DF.
Ee1Form ee1_form_for(Scheme s, double N, double N0);
/// Throws UnsupportedScheme for anything but AF, NncSnd and NncIan.
Ee2Form ee2_form_for(Scheme s, double N, double N0);

bool is_ee1_scheme(Scheme s);

/// Sum rate computed through the scheme's EE1/EE2 parameterization.
double form_sum_rate(Scheme s, const ChannelParams &p);

/// sum_rate(s, p) / total_power(p.P, p.P0, m), in bits per joule.
double eval_ee(Scheme s, const ChannelParams &p, const PowerModel &m);

} // namespace mwrc
