#include <gtest/gtest.h>

#include <set>

#include "sdw/errors.hpp"
#include "sdw/modular.hpp"

using namespace sdw;

namespace {

Characteristics pt(long a, long b, long c, long d) { return {Rational(a, b), Rational(c, d)}; }

// Direct sigma_{k-1}(n) sums.
Integer sigma(long n, int power) {
  Integer s = 0;
  for (long d = 1; d <= n; ++d)
    if (n % d == 0) {
      Integer t = 1;
      for (int i = 0; i < power; ++i) t *= d;
      s += t;
    }
  return s;
}

}  // namespace

TEST(Modular, GeneratorsOnParameters) {
  EXPECT_EQ(act_T(pt(0, 1, 1, 3)), pt(0, 1, 5, 6));
  EXPECT_EQ(act_S(pt(0, 1, 1, 3)), pt(2, 3, 0, 1));
  EXPECT_EQ(reduce(pt(-1, 6, 7, 6)), pt(5, 6, 1, 6));
  // S^2 acts as (p,q) -> (-p,-q).
  EXPECT_EQ(act_S(act_S(pt(1, 6, 1, 2))), pt(5, 6, 1, 2));
}

TEST(Modular, ReferenceOrbits) {
  Orbit a = orbit(pt(0, 1, 1, 3));
  EXPECT_EQ(a.n(), 24u);
  EXPECT_EQ(a.n0(), 4u);
  EXPECT_EQ(valence_budget(a), Rational(0));
  Orbit b = orbit(pt(1, 6, 5, 6));
  EXPECT_EQ(b.n(), 8u);
  EXPECT_EQ(b.n0(), 0u);
  EXPECT_EQ(valence_budget(b), Rational(2, 3));
  EXPECT_TRUE(b.contains(pt(1, 2, 1, 6)));
  EXPECT_FALSE(b.contains(pt(0, 1, 1, 3)));
}

TEST(Modular, OrbitsAreClosedAndSorted) {
  for (const Characteristics& seed : {pt(1, 12, 5, 7), pt(2, 5, 1, 3), pt(0, 1, 1, 4)}) {
    Orbit o = orbit(seed);
    EXPECT_TRUE(o.contains(reduce(seed)));
    for (const auto& x : o.points) {
      EXPECT_TRUE(o.contains(act_S(x)));
      EXPECT_TRUE(o.contains(act_T(x)));
    }
    for (std::size_t i = 1; i < o.n(); ++i)
      EXPECT_TRUE(o.points[i - 1].p < o.points[i].p ||
                  (o.points[i - 1].p == o.points[i].p && o.points[i - 1].q < o.points[i].q));
    // The same orbit from any of its points.
    EXPECT_EQ(orbit(o.points.back()).points, o.points);
  }
}

TEST(Modular, ExceptionalOrbits) {
  Orbit half = orbit(pt(1, 2, 1, 2));
  EXPECT_EQ(half.n(), 1u);
  EXPECT_TRUE(is_exceptional(half));
  Orbit three = orbit(pt(0, 1, 0, 1));
  EXPECT_EQ(three.n(), 3u);
  EXPECT_TRUE(is_exceptional(three));
  EXPECT_THROW(valence_budget(half), ExceptionalOrbit);
  EXPECT_FALSE(is_exceptional(orbit(pt(1, 6, 5, 6))));
}

TEST(Modular, ValuationTables) {
  EXPECT_EQ(expected_theta_valuation(Rational(1, 2)), Rational(1, 8));
  EXPECT_EQ(expected_theta_valuation(Rational(5, 6)), Rational(1, 72));
  EXPECT_FALSE(expected_dq_theta_valuation(pt(1, 2, 0, 1)).has_value());
  EXPECT_EQ(*expected_dq_theta_valuation(pt(0, 1, 1, 3)), Rational(1, 2));
  EXPECT_EQ(expected_a0_valuation(pt(0, 1, 1, 3)), Rational(-1));
  EXPECT_EQ(expected_a0_valuation(pt(1, 6, 5, 6)), Rational(1, 3));
  EXPECT_EQ(expected_a0_valuation(pt(5, 6, 1, 6)), Rational(1, 3));
  EXPECT_EQ(expected_a0_valuation(pt(1, 2, 1, 3)), Rational(1));
  EXPECT_THROW(expected_a0_valuation(pt(1, 2, 1, 2)), DomainError);
}

TEST(Modular, DeltaFromEisensteinSeries) {
  const long n = 20;
  PuiseuxSeries e4 = eisenstein_series(4, n), e6 = eisenstein_series(6, n);
  PuiseuxSeries d = (pow(e4, 3) - pow(e6, 2)) * Rational(1, 1728);
  PuiseuxSeries delta = delta_series(n);
  EXPECT_TRUE(delta.agrees_with(d));
  EXPECT_EQ(delta.coeff(Rational(1)).to_rational(), Rational(1));
  EXPECT_EQ(delta.coeff(Rational(2)).to_rational(), Rational(-24));
  EXPECT_EQ(delta.coeff(Rational(11)).to_rational(), Rational(534612));
}

TEST(Modular, EisensteinCoefficients) {
  // E14 = 1 - 24 sum sigma_13(n) q^n.
  PuiseuxSeries e14 = eisenstein_series(14, 12);
  for (long k = 1; k < 12; ++k) EXPECT_EQ(e14.coeff(Rational(k)).to_rational(), Rational(-24 * sigma(k, 13), 1)) << k;
  // E4 E6 = E10 and E4^2 = E8.
  EXPECT_TRUE((eisenstein_series(4, 15) * eisenstein_series(6, 15)).agrees_with(eisenstein_series(10, 15)));
  EXPECT_TRUE(pow(eisenstein_series(4, 15), 2).agrees_with(eisenstein_series(8, 15)));
}

TEST(Modular, BernoulliAndZetaNormalization) {
  EXPECT_EQ(bernoulli(1), Rational(1, 2));  // Akiyama-Tanigawa convention
  EXPECT_EQ(bernoulli(2), Rational(1, 6));
  EXPECT_EQ(bernoulli(12), Rational(-691, 2730));
  EXPECT_EQ(bernoulli(13), Rational(0));
  // 2 zeta(2)/pi^2 = 1/3, 2 zeta(4)/pi^4 = 1/45.
  EXPECT_EQ(g_normalization(2), Rational(1, 3));
  EXPECT_EQ(g_normalization(4), Rational(1, 45));
  EXPECT_EQ(g_normalization(6), Rational(2, 945));
  EXPECT_EQ(g_normalization(14), Rational(4, 18243225));
}

TEST(Modular, WordsAndTau) {
  EXPECT_EQ(word_matrix({"S"}), (std::array<long, 4>{0, -1, 1, 0}));
  EXPECT_EQ(word_matrix({"ST"}), (std::array<long, 4>{0, -1, 1, 1}));
  Complex tau(0.3, 1.1);
  Complex st = act_tau({"ST"}, tau);
  EXPECT_LT(std::abs(st - Real(-1) / (tau + Real(1))), 1e-15L);
  EXPECT_EQ(act_params({"ST"}, pt(0, 1, 1, 3)), act_T(act_S(pt(0, 1, 1, 3))));
}

TEST(Modular, SampledMuAreSeededAndInRange) {
  auto a = sample_mus(6, 42), b = sample_mus(6, 42);
  EXPECT_EQ(a, b);
  for (Complex mu : a) {
    EXPECT_GE(mu.real(), 0.7L);
    EXPECT_LE(mu.real(), 2.0L);
    EXPECT_LE(std::abs(mu.imag()), 0.3L);
  }
  EXPECT_NE(sample_mus(6, 43), a);
}

TEST(Modular, ResidualFloor) {
  EXPECT_EQ(relative_residual(Complex(1e-9), Complex(0)), 1e-3);
  EXPECT_NEAR(relative_residual(Complex(2), Complex(1)), 0.5, 1e-16);
}

TEST(Modular, VectorValuedLaws) {
  const std::vector<Word> words{{"S"}, {"T"}, {"ST"}};
  for (const Characteristics& seed : {pt(0, 1, 1, 3), pt(1, 6, 5, 6)})
    for (int order : {0, 2, 4}) {
      ModularityReport r = vv_modularity_report(orbit(seed), order, words, 3, 11);
      EXPECT_LT(r.max_residual, 1e-9) << r.worst;
      EXPECT_GT(r.checks, 0u);
    }
}

TEST(Modular, OneParameterLaws) {
  for (int order : {0, 2, 4}) {
    ModularityReport r = one_param_report(Complex(1.1, 0.3), order, 4, 12, 2.0);
    EXPECT_LT(r.max_residual, 1e-9) << r.worst;
  }
  EXPECT_THROW(one_param_report(Complex(0), 0, 1, 1), InvalidParameters);
}
