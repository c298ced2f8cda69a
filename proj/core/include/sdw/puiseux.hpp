#pragma once

#include <complex>
#include <map>
#include <optional>
#include <string>

#include "sdw/cyclotomic.hpp"
#include "sdw/rational.hpp"

namespace sdw {

// Formal factor pi^pi * Lambda^lambda carried by a series.
struct Grade {
  long pi = 0;
  long lambda = 0;
  friend bool operator==(const Grade&, const Grade&) = default;
  friend Grade operator+(Grade a, Grade b) { return {a.pi + b.pi, a.lambda + b.lambda}; }
  friend Grade operator-(Grade a, Grade b) { return {a.pi - b.pi, a.lambda - b.lambda}; }
};

// Truncated Puiseux series sum_k c_k Q^(k/D) in the nome Q = exp(-2 pi mu), with
// coefficients in Q(zeta_N). Terms with exponent >= trunc/D are unknown; an
// absent trunc means the series is exact (a finite sum).
class PuiseuxSeries {
public:
  PuiseuxSeries() = default;
  PuiseuxSeries(long den, long field_order, Grade grade, std::optional<long> trunc);

  static PuiseuxSeries zero(Grade grade = {}, std::optional<Rational> trunc = std::nullopt);
  static PuiseuxSeries constant(const Cyclotomic& c, Grade grade = {});
  static PuiseuxSeries monomial(const Rational& exponent, const Cyclotomic& c, Grade grade = {});

  long den() const { return den_; }
  long field_order() const { return field_; }
  Grade grade() const { return grade_; }
  void set_grade(Grade g) { grade_ = g; }
  const std::map<long, Cyclotomic>& terms() const { return terms_; }
  std::optional<long> trunc_num() const { return trunc_; }
  std::optional<Rational> truncation() const;
  bool exact() const { return !trunc_.has_value(); }

  // Coefficient of Q^e; zero if absent. Throws std::out_of_range past truncation.
  Cyclotomic coeff(const Rational& e) const;
  void add_term(const Rational& e, const Cyclotomic& c);

  // Lowest exponent with a nonzero coefficient, or nullopt if none is known.
  std::optional<Rational> valuation() const;

  PuiseuxSeries rebased(long den) const;
  PuiseuxSeries with_field(long order) const;
  // Drops terms with exponent >= t and lowers the truncation to t.
  PuiseuxSeries truncated(const Rational& t) const;
  // Smallest exponent denominator and drop zero terms.
  PuiseuxSeries normalized() const;

  PuiseuxSeries& operator+=(const PuiseuxSeries& o);
  PuiseuxSeries& operator-=(const PuiseuxSeries& o);
  PuiseuxSeries& operator*=(const Cyclotomic& c);
  PuiseuxSeries& operator*=(const Rational& r);
  PuiseuxSeries operator-() const;

  friend PuiseuxSeries operator+(PuiseuxSeries a, const PuiseuxSeries& b) { return a += b; }
  friend PuiseuxSeries operator-(PuiseuxSeries a, const PuiseuxSeries& b) { return a -= b; }
  friend PuiseuxSeries operator*(const PuiseuxSeries& a, const PuiseuxSeries& b);
  friend PuiseuxSeries operator*(PuiseuxSeries a, const Cyclotomic& c) { return a *= c; }
  friend PuiseuxSeries operator*(PuiseuxSeries a, const Rational& r) { return a *= r; }
  friend PuiseuxSeries operator/(const PuiseuxSeries& a, const PuiseuxSeries& b);

  // Coefficientwise equality on the common known range, with equal grades.
  bool agrees_with(const PuiseuxSeries& o) const;

  bool is_rational() const;
  std::string to_string() const;

private:
  long den_ = 1;
  long field_ = 1;
  Grade grade_{};
  std::optional<long> trunc_;
  std::map<long, Cyclotomic> terms_;
};

// 1/a. An exact input that is not a monomial needs an absolute truncation.
PuiseuxSeries invert(const PuiseuxSeries& a, std::optional<Rational> trunc = std::nullopt);
PuiseuxSeries pow(const PuiseuxSeries& a, long e);
// d/dmu; multiplies Q^e by -2 pi e, so the pi grade rises by one.
PuiseuxSeries mu_derivative(const PuiseuxSeries& a);
// Numerical value at mu with Lambda = 1, including the pi grade.
std::complex<long double> evaluate(const PuiseuxSeries& a, std::complex<long double> mu);
// Q^e -> exp(2 pi i e) Q^e, the effect of tau -> tau + 1.
PuiseuxSeries unit_twist(const PuiseuxSeries& a);

}  // namespace sdw
