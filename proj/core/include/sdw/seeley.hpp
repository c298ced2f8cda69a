#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sdw/instanton.hpp"
#include "sdw/jet.hpp"
#include "sdw/puiseux.hpp"
#include "sdw/theta.hpp"

namespace sdw {

// Variables of the closed-form coefficients, in this order:
// w1 w2 w3, w1' w2' w3', ..., w1'''' w2'''' w3'''', F F' F'' F''' F''''.
constexpr int kNumVars = 20;
constexpr int w_var(int j, int k) { return 3 * k + (j - 1); }  // j = 1..3, k = 0..4
constexpr int f_var(int k) { return 15 + k; }

// coefficient num/den times prod_i var_i^exps[i].
struct Term {
  long num;
  long den;
  std::array<int, kNumVars> exps;
};

using TermTable = std::span<const Term>;

// order is 2n in {0, 2, 4}; anything else throws InvalidParameters.
TermTable coefficient_terms(int order);
Grade coefficient_grade(int order);

// Human-readable rendering, one term per line, e.g.
//   -1/15 * w1^3 * w2^3 * w3^-5
std::string render_terms(TermTable table);
std::vector<Term> parse_terms(const std::string& text);
// FNV-1a over the canonical rendering.
std::uint64_t terms_checksum(TermTable table);

// Closed-form evaluation from a frame.
PuiseuxSeries coefficient_series(const SeriesFrame& frame, int order);
Complex coefficient_value(const JetFrame& frame, int order);
// Value and first mu-derivative.
TaylorJet<1> coefficient_jet(const JetFrame& frame, int order);

// Direct term-by-term evaluation, used as an oracle for the grouped evaluator.
Complex coefficient_value_naive(const JetFrame& frame, int order);

// Exact series of one parameter point with every exponent < trunc known.
PuiseuxSeries point_series(const Characteristics& pt, int order, const Rational& trunc);

// Sum over points, converted to a rational q-series (integer exponents).
// Throws std::logic_error if a non-rational coefficient or fractional exponent survives.
PuiseuxSeries orbit_sum_series(std::span<const Characteristics> points, int order, const Rational& trunc);
Complex orbit_sum_value(std::span<const Characteristics> points, int order, Complex mu, double tol = 1e-15);

struct CoeffResult {
  int order = 0;
  Grade grade{};
  std::optional<PuiseuxSeries> series;
  std::optional<Complex> mu;
  std::optional<Complex> value;
};

}  // namespace sdw
