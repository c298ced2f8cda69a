#include "sdw/instanton.hpp"

#include <numbers>

#include "sdw/errors.hpp"

namespace sdw {

namespace {

const Rational kHalf(1, 2);

Characteristics shifted(const Characteristics& c, const Rational& dp, const Rational& dq) {
  return {c.p + dp, c.q + dq};
}

}  // namespace

bool is_degenerate(const Characteristics& pt) {
  Rational p = pt.p.frac();
  Rational q = pt.q.frac();
  return (p.is_zero() && q.is_zero()) || (p.is_zero() && q == kHalf) || (p == kHalf && q.is_zero());
}

SeriesFrame frame_two_param_series(const Characteristics& pt, const Rational& trunc) {
  if (is_degenerate(pt)) throw DomainError("degenerate characteristic: d/dq theta vanishes identically");
  // The global phase exp(2 pi i p q) of each theta[a,b] cancels from every
  // quotient below up to the constants i*exp(pi i q) (w2) and exp(pi i q) (w3).
  auto th = [&](const Characteristics& c, int dq) { return theta_series_unphased({c, 0, dq}, trunc); };
  PuiseuxSeries t2 = th(kTheta2, 0), t3 = th(kTheta3, 0), t4 = th(kTheta4, 0);
  PuiseuxSeries inv_den = invert(th(pt, 0));
  PuiseuxSeries a = th(shifted(pt, 0, kHalf), 1);
  PuiseuxSeries b = th(shifted(pt, kHalf, kHalf), 1);
  PuiseuxSeries c = th(shifted(pt, kHalf, 0), 1);
  PuiseuxSeries g = th(pt, 1);

  const Rational qh = (pt.q / Rational(2)).frac();
  const Cyclotomic e_q = Cyclotomic::zeta(to_long(qh.den()), to_long(qh.num()));  // exp(pi i q)
  const Cyclotomic i_unit = Cyclotomic::zeta(4, 1);

  SeriesFrame f;
  f.w[0][0] = t3 * t4 * a * inv_den * (Cyclotomic(Rational(-1, 2), 4) * i_unit);
  f.w[1][0] = t2 * t4 * b * inv_den * (e_q * Rational(-1, 2));
  f.w[2][0] = t2 * t3 * c * inv_den * (e_q * Rational(-1, 2));
  PuiseuxSeries ratio = th(pt, 0) * invert(g);
  f.F[0] = ratio * ratio * Rational(2);
  f.F[0].set_grade(f.F[0].grade() + Grade{-1, -1});
  for (int k = 1; k <= 4; ++k) {
    for (int j = 0; j < 3; ++j) f.w[j][k] = mu_derivative(f.w[j][k - 1]);
    f.F[k] = mu_derivative(f.F[k - 1]);
  }
  return f;
}

JetFrame frame_two_param_jet(const Characteristics& pt, Complex mu, double tol) {
  if (is_degenerate(pt)) throw DomainError("degenerate characteristic: d/dq theta vanishes identically");
  using J = TaylorJet<5>;
  auto th = [&](const Characteristics& c, int dq) { return theta_jet<5>(c, dq, mu, tol); };
  J t2 = th(kTheta2, 0), t3 = th(kTheta3, 0), t4 = th(kTheta4, 0);
  J den = th(pt, 0);
  J a = th(shifted(pt, 0, kHalf), 1);
  J b = th(shifted(pt, kHalf, kHalf), 1);
  J c = th(shifted(pt, kHalf, 0), 1);
  J g = th(pt, 1);
  const Complex phase = std::polar(Real(1), -std::numbers::pi_v<Real> * pt.p.to_long_double());  // 1/exp(i pi p)
  const Complex i(0, 1);
  JetFrame f;
  f.w[0] = (t3 * t4 * a / den) * (-0.5 * i * phase);
  f.w[1] = (t2 * t4 * b / den) * (0.5 * i * phase);
  f.w[2] = (t2 * t3 * c / den) * Complex(-0.5);
  J r = den / g;
  f.F = r * r * Complex(2 / std::numbers::pi_v<Real>);
  return f;
}

JetFrame frame_one_param_jet(Complex q0, Complex mu, double C, double tol) {
  if (!(C > 0)) throw InvalidParameters("conformal constant C must be positive");
  if (std::abs(mu + q0) < 1e-12 * std::max(Real(1), std::abs(mu))) throw DomainError("mu + q0 vanishes");
  using J = TaylorJet<5>;
  J x = J::variable(mu) + J(q0);
  J inv = J(1.0) / x;
  JetFrame f;
  const Characteristics chars[3] = {kTheta2, kTheta3, kTheta4};
  for (int j = 0; j < 3; ++j) f.w[j] = inv + log_derivative(theta_jet<6>(chars[j], 0, mu, tol)) * Complex(2.0);
  f.F = x * x * Complex(C);
  return f;
}

}  // namespace sdw
