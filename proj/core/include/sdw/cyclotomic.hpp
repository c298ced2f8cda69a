#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "sdw/rational.hpp"

namespace sdw {

// Integer coefficients of the N-th cyclotomic polynomial, lowest degree first.
const std::vector<long>& cyclotomic_polynomial(long n);
long euler_phi(long n);

// Element of Q(zeta_N) in the power basis 1, zeta, ..., zeta^(phi(N)-1).
// Binary operations on different orders embed both sides into Q(zeta_lcm).
class Cyclotomic {
public:
  Cyclotomic() : Cyclotomic(1) {}
  explicit Cyclotomic(long order);
  Cyclotomic(const Rational& r, long order = 1);  // NOLINT(google-explicit-constructor)

  static Cyclotomic zeta(long order, long k = 1);

  long order() const { return order_; }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational& operator[](size_t i) { return c_[i]; }
  const Rational& operator[](size_t i) const { return c_[i]; }

  Cyclotomic embed(long target_order) const;

  bool is_zero() const;
  bool is_rational() const;
  Rational to_rational() const;  // throws std::domain_error unless is_rational()
  std::complex<long double> to_complex() const;
  Cyclotomic inverse() const;  // throws std::domain_error on zero

  Cyclotomic& operator+=(const Cyclotomic& o);
  Cyclotomic& operator-=(const Cyclotomic& o);
  Cyclotomic& operator*=(const Cyclotomic& o);
  Cyclotomic& operator*=(const Rational& r);
  Cyclotomic& operator/=(const Cyclotomic& o) { return *this *= o.inverse(); }

  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Rational& b) { return a *= b; }
  friend Cyclotomic operator/(Cyclotomic a, const Cyclotomic& b) { return a /= b; }
  Cyclotomic operator-() const;

  // Same order and coefficients (no implicit embedding).
  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);

  std::string to_string() const;

  // a += b * c, all of one order. Hot path for series products.
  static void fma(Cyclotomic& acc, const Cyclotomic& b, const Cyclotomic& c);

  struct Field;

private:
  const Field* field_;
  long order_;
  std::vector<Rational> c_;
};

// Value semantics: compares after embedding into a common field.
bool equal_value(const Cyclotomic& a, const Cyclotomic& b);

}  // namespace sdw
