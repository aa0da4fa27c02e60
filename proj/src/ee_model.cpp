#include "mwrc/ee_model.hpp"

#include "mwrc/errors.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace mwrc {

namespace {

bool finite_nonneg(double x) { return std::isfinite(x) && x >= 0.0; }

} // namespace

void PowerModel::validate() const {
  if (!std::isfinite(phi) || phi < 3.0)
    throw DomainError("power model: phi must be >= 3");
  if (!std::isfinite(psi) || psi < 1.0)
    throw DomainError("power model: psi must be >= 1");
  if (!std::isfinite(Pc) || Pc <= 0.0)
    throw DomainError("power model: circuit power must be > 0");
}

double total_power(double P, double P0, const PowerModel &m) {
  if (!finite_nonneg(P) || !finite_nonneg(P0))
    throw DomainError("total_power: powers must be finite and non-negative");
  m.validate();
  return m.phi * P + m.psi * P0 + m.Pc;
}

void Ee1Form::validate() const {
  if (!finite_nonneg(a1) || !finite_nonneg(a2) || !finite_nonneg(alpha1) ||
      !finite_nonneg(alpha2))
    throw DomainError("EE1 form: prefactors must be non-negative");
  if (!(N > 0.0) || !(N0 > 0.0) || !std::isfinite(N) || !std::isfinite(N0))
    throw DomainError("EE1 form: noise powers must be positive");
}

double Ee1Form::rate(double P, double P0) const {
  return std::min(relay_rate(P0), user_rate(P));
}

void Ee2Form::validate() const {
  if (!finite_nonneg(alpha) || !finite_nonneg(a) || !finite_nonneg(b) ||
      !finite_nonneg(c) || !finite_nonneg(d))
    throw DomainError("EE2 form: parameters must be non-negative");
}

double Ee2Form::sinr(double P, double P0) const {
  const double num = P * P0;
  if (num == 0.0)
    return 0.0;
  return num / (d * num + a * P + b * P0 + c);
}

bool is_ee1_scheme(Scheme s) {
  return s == Scheme::OuterBound || s == Scheme::DF;
}

Ee1Form ee1_form_for(Scheme s, double N, double N0) {
  switch (s) {
  case Scheme::OuterBound:
    return {1.5, 3.0, 1.0, 1.0, N, N0};
  case Scheme::DF:
    return {1.5, 1.0, 1.0, 3.0, N, N0};
  default:
    throw UnsupportedScheme("scheme '" + std::string(scheme_name(s)) +
                            "' has no EE1 form");
  }
}

Ee2Form ee2_form_for(Scheme s, double N, double N0) {
  switch (s) {
  case Scheme::AF:
    return {1.0, N, N0 / 3.0, N * N0 / 3.0, 0.0};
  case Scheme::NncSnd:
    return {1.5, N, N0 / 2.0, N * N0 / 2.0, 0.0};
  case Scheme::NncIan:
    return {3.0, 3.0 * N, N0, N * N0, 2.0};
  default:
    throw UnsupportedScheme("scheme '" + std::string(scheme_name(s)) +
                            "' has no EE2 form");
  }
}

double form_sum_rate(Scheme s, const ChannelParams &p) {
  p.validate();
  if (is_ee1_scheme(s))
    return ee1_form_for(s, p.N, p.N0).rate(p.P, p.P0);
  return ee2_form_for(s, p.N, p.N0).rate(p.P, p.P0);
}

double eval_ee(Scheme s, const ChannelParams &p, const PowerModel &m) {
  return sum_rate(s, p) / total_power(p.P, p.P0, m);
}

} // namespace mwrc
