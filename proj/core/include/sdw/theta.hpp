#pragma once

#include "sdw/jet.hpp"
#include "sdw/puiseux.hpp"
#include "sdw/rational.hpp"

namespace sdw {

// Characteristics [p, q] of theta[p,q](i mu) = sum_m exp(-pi (m+p)^2 mu + 2 pi i (m+p) q).
struct Characteristics {
  Rational p;
  Rational q;
  friend bool operator==(const Characteristics&, const Characteristics&) = default;
};

inline const Characteristics kTheta2{Rational(1, 2), Rational(0)};
inline const Characteristics kTheta3{Rational(0), Rational(0)};
inline const Characteristics kTheta4{Rational(0), Rational(1, 2)};

// d^n/dmu^n (d/dq)^dq theta[p,q](i mu).
struct ThetaSpec {
  Characteristics chars;
  int mu_order = 0;  // 0..kMaxThetaOrder
  int dq = 0;        // 0 or 1
};

// Four mu-derivatives feed the coefficients; the one-parameter family takes a
// log-derivative and the jet checks differentiate once more, hence 6.
constexpr int kMaxThetaOrder = 6;

// Exact nome expansion with all terms of exponent < trunc. The phase
// exp(2 pi i (m+p) q) lives in Q(zeta_N); the grade is pi^(mu_order + dq).
PuiseuxSeries theta_series(const ThetaSpec& spec, const Rational& trunc);

// Same with the global factor exp(2 pi i p q) removed, leaving exp(2 pi i m q).
// Used where that factor cancels, since it keeps the coefficient field small.
PuiseuxSeries theta_series_unphased(const ThetaSpec& spec, const Rational& trunc);

Complex theta_eval(const ThetaSpec& spec, Complex mu, double tol = 1e-15);

// mu-derivatives 0..K of (d/dq)^dq theta[p,q] at mu.
template <int K>
TaylorJet<K> theta_jet(const Characteristics& c, int dq, Complex mu, double tol = 1e-15) {
  TaylorJet<K> j;
  for (int n = 0; n <= K; ++n) j[static_cast<std::size_t>(n)] = theta_eval({c, n, dq}, mu, tol);
  return j;
}

// C(j|n) = (-i)^n n! / (2^j (n-2j)! (2j)!!), an element of Q(i).
Cyclotomic c_const(int j, int n);

// Right-hand sides of the modular laws, evaluated numerically.
// T: value of the spec at mu - i (tau -> tau + 1) rewritten at mu.
Complex theta_t_law_rhs(const ThetaSpec& spec, Complex mu, double tol = 1e-15);
// S: value of the spec at 1/mu (tau -> -1/tau) rewritten at mu.
Complex theta_s_law_rhs(const ThetaSpec& spec, Complex mu, double tol = 1e-15);

}  // namespace sdw
