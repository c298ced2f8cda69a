#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sdw/jet.hpp"
#include "sdw/puiseux.hpp"
#include "sdw/theta.hpp"

namespace sdw {

// Parameter pairs reduced into [0,1)^2.
using OrbitPoint = Characteristics;

OrbitPoint reduce(const Characteristics& c);
// (p,q) -> (-q, p) and (p,q) -> (p, q + p + 1/2), both mod 1.
OrbitPoint act_S(const OrbitPoint& pt);
OrbitPoint act_T(const OrbitPoint& pt);

struct Orbit {
  std::vector<OrbitPoint> points;  // lexicographic in (p, q)
  std::size_t n() const { return points.size(); }
  std::size_t n0() const;          // points with p = 0
  bool contains(const OrbitPoint& pt) const;
};

Orbit orbit(const Characteristics& seed);

// {(1/2,1/2)} and {(0,0),(1/2,0),(0,1/2)}.
bool is_exceptional(const Orbit& o);

// n/12 - n0/2. Throws ExceptionalOrbit for the two exceptional orbits and
// std::logic_error if n >= 6 n0 fails.
Rational valence_budget(const Orbit& o);

// Orders at infinity predicted from the characteristic alone.
Rational expected_theta_valuation(const Rational& p);                       // <p>^2/2
std::optional<Rational> expected_dq_theta_valuation(const Characteristics&);  // nullopt: identically zero
// Assembled from the theta orders; -1 for p = 0, 1 for p = 1/2, |p - 1/2| otherwise.
Rational expected_a0_valuation(const Characteristics& c);

// Rational q-series (integer exponents, field Q) with every exponent < trunc.
PuiseuxSeries delta_series(long trunc);
PuiseuxSeries eisenstein_series(int k, long trunc);  // E_k, constant term 1, even k >= 4
Rational bernoulli(int n);
// 2 zeta(k) / pi^k for even k >= 2, so that G_k = (this) * pi^k * E_k.
Rational g_normalization(int k);

// SL2(Z) words in S = [[0,-1],[1,0]] and T = [[1,1],[0,1]], read left to right
// as a matrix product.
struct Word {
  std::string letters;
};
std::array<long, 4> word_matrix(const Word& w);  // a, b, c, d
Complex act_tau(const Word& w, Complex tau);
// Parameter action matching the coefficient law
//   a[x](M tau) = (c tau + d)^2 a[x.M](tau),
// i.e. the letters applied to x from left to right.
OrbitPoint act_params(const Word& w, const OrbitPoint& pt);

struct ModularityReport {
  double max_residual = 0;
  std::string worst;  // description of the worst (word, point, mu)
  std::size_t checks = 0;
};

// Vector-valued law for every point of the orbit, for each word, at sampled mu
// with Re in [0.7, 2], |Im| <= 0.3.
ModularityReport vv_modularity_report(const Orbit& o, int order, const std::vector<Word>& words, int samples,
                                      std::uint64_t seed);
std::vector<Complex> sample_mus(int samples, std::uint64_t seed);

// One-parameter family: a[q0](i mu + 1) = a[q0 - i](i mu) and
// a[q0](i/mu) = s(q0) mu^2 a[1/q0](i mu) with s = -q0^4, q0^2, -1 for orders 0, 2, 4.
ModularityReport one_param_report(Complex q0, int order, int samples, std::uint64_t seed, double C = 1.0);

// |a - b| / max(|a|, |b|, floor). The floor keeps quantities that vanish
// identically (a2 of the one-parameter family) from reporting rounding noise.
constexpr double kResidualFloor = 1e-6;
double relative_residual(Complex a, Complex b);

// ---- identification ----

struct Multiplier {
  int delta = 0;
  int e4 = 0;
  int e6 = 0;
  int weight() const { return 12 * delta + 4 * e4 + 6 * e6; }
};

struct IdentificationResult {
  Multiplier multiplier;
  int weight = 0;       // weight of series * multiplier
  bool cusp = false;    // target space is S_weight rather than M_weight
  int dimension = 1;
  int eisenstein = 0;   // k of the G_k in the basis (0: none)
  Rational constant;    // exact, in terms of G_k and Delta
  Grade grade;          // pi and Lambda exponents of the full constant
  Rational rational_constant;  // in terms of E_k and Delta, before normalization
  std::string target;   // e.g. "G14/Delta", "Delta*G6/G4^4"
};

// series: weight-2 orbit sum in rational q-series form (grade = its pi/Lambda
// prefactor). Throws IdentificationFailed when no multiplier within
// delta <= 2, e4 <= 4, e6 <= 2 gives a constant ratio.
IdentificationResult identify(const PuiseuxSeries& series, const Orbit& o);
// constant * target / multiplier as a rational q-series, for round-trip checks.
PuiseuxSeries reconstruct(const IdentificationResult& r, long trunc, Grade grade);

}  // namespace sdw
