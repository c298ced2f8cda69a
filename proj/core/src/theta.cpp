#include "sdw/theta.hpp"

#include <cmath>
#include <numbers>
#include <numeric>

#include "sdw/errors.hpp"

namespace sdw {

namespace {

void check_spec(const ThetaSpec& s) {
  if (s.mu_order < 0 || s.mu_order > kMaxThetaOrder)
    throw InvalidParameters("theta derivative order must lie in 0..6");
  if (s.dq != 0 && s.dq != 1) throw InvalidParameters("q-derivative order must be 0 or 1");
}

PuiseuxSeries theta_series_impl(const ThetaSpec& spec, const Rational& trunc, bool phased) {
  check_spec(spec);
  const Rational& p = spec.chars.p;
  const Rational& q = spec.chars.q;
  long n_field = to_long(q.den());
  if (phased) n_field = std::lcm(n_field, to_long((p * q).den()));
  if (spec.dq) n_field = std::lcm(n_field, 4L);
  long den = 2 * to_long(p.den()) * to_long(p.den());
  Grade grade{spec.mu_order + spec.dq, 0};
  PuiseuxSeries out(den, n_field, grade, to_long((trunc * Rational(den)).floor()) +
                                              ((trunc * Rational(den)).is_integer() ? 0 : 1));
  // (m+p)^2/2 < trunc  <=>  |m+p| < sqrt(2 trunc)
  double bound = std::sqrt(std::max(0.0, 2.0 * trunc.to_double())) + 1.0;
  long m_lo = static_cast<long>(std::floor(-bound - p.to_double())) - 1;
  long m_hi = static_cast<long>(std::ceil(bound - p.to_double())) + 1;
  const Cyclotomic two_i = Cyclotomic(Rational(2), 4) * Cyclotomic::zeta(4, 1);
  for (long m = m_lo; m <= m_hi; ++m) {
    Rational x = Rational(m) + p;
    Rational e = x * x / Rational(2);
    if (e >= trunc) continue;
    Rational mag = pow(x, 2 * spec.mu_order);
    if (spec.mu_order % 2) mag = -mag;
    if (spec.dq) mag *= x;
    if (mag.is_zero()) continue;
    Rational ph = (phased ? x * q : Rational(m) * q).frac();
    Cyclotomic c = Cyclotomic::zeta(to_long(ph.den()), to_long(ph.num())).embed(n_field) * mag;
    if (spec.dq) c *= two_i.embed(n_field);
    out.add_term(e, c);
  }
  return out.normalized();
}

}  // namespace

PuiseuxSeries theta_series(const ThetaSpec& spec, const Rational& trunc) {
  return theta_series_impl(spec, trunc, true);
}

PuiseuxSeries theta_series_unphased(const ThetaSpec& spec, const Rational& trunc) {
  return theta_series_impl(spec, trunc, false);
}

Complex theta_eval(const ThetaSpec& spec, Complex mu, double tol) {
  check_spec(spec);
  if (!(mu.real() > 0)) throw DomainError("theta evaluation needs Re(mu) > 0");
  constexpr Real pi = std::numbers::pi_v<Real>;
  const Real p = spec.chars.p.to_long_double();
  const Real q = spec.chars.q.to_long_double();
  const int deg = 2 * spec.mu_order + spec.dq;
  Real reach = std::sqrt(std::max(Real(0), -std::log(Real(tol) * Real(1e-2)) / (pi * mu.real())));
  // Polynomial prefactors push the tail out a little.
  reach += std::sqrt(deg / (pi * mu.real())) + deg;
  long m_max = static_cast<long>(std::ceil(std::abs(p) + reach)) + 2;
  Complex sum = 0;
  for (long m = -m_max; m <= m_max; ++m) {
    // Phase from the fractional part of x q only, to keep the argument small.
    const Rational xr = Rational(m) + spec.chars.p;
    const Real x = xr.to_long_double();
    const Real ph = 2 * pi * (xr * spec.chars.q).frac().to_long_double();
    Complex term = std::exp(-pi * x * x * mu) * std::polar(Real(1), ph);
    sum += term * std::pow(x, deg);
  }
  Complex pref = std::pow(-pi, spec.mu_order);
  if (spec.dq) pref *= Complex(0, 2 * pi);
  return pref * sum;
}

Cyclotomic c_const(int j, int n) {
  if (j < 0 || 2 * j > n) throw InvalidParameters("c_const needs 0 <= 2j <= n");
  Integer num(1), den(1);
  for (int i = 2; i <= n; ++i) num *= i;
  for (int i = 2; i <= n - 2 * j; ++i) den *= i;
  // 2^j * (2j)!! = 2^j * 2^j * j!
  for (int i = 0; i < 2 * j; ++i) den *= 2;
  for (int i = 2; i <= j; ++i) den *= i;
  // (-i)^n = zeta_4^(3n)
  return Cyclotomic::zeta(4, 3L * n) * Rational(num, den);
}

Complex theta_t_law_rhs(const ThetaSpec& spec, Complex mu, double tol) {
  const Rational& p = spec.chars.p;
  ThetaSpec shifted{{p, spec.chars.q + p + Rational(1, 2)}, spec.mu_order, spec.dq};
  Real ph = -std::numbers::pi_v<Real> * (p * (p + Rational(1))).to_long_double();
  return std::polar(Real(1), ph) * theta_eval(shifted, mu, tol);
}

Complex theta_s_law_rhs(const ThetaSpec& spec, Complex mu, double tol) {
  const Rational& p = spec.chars.p;
  const Rational& q = spec.chars.q;
  const int n = spec.mu_order;
  const int big = 2 * n + spec.dq;
  Characteristics dual{-q, p};
  Complex sum = 0;
  for (int j = 0; j <= n; ++j) {
    Complex power = std::pow(mu, static_cast<Real>(big - j) + Real(0.5));
    sum += c_const(j, big).to_complex() * power * theta_eval({dual, n - j, spec.dq}, mu, tol);
  }
  return std::polar(Real(1), 2 * std::numbers::pi_v<Real> * (p * q).to_long_double()) * sum;
}

}  // namespace sdw
