#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace sdw {

using Integer = mpz_class;

// Exact rational in canonical form (positive denominator, gcd 1).
class Rational {
public:
  Rational() = default;
  Rational(long n) : v_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(int n) : v_(static_cast<long>(n)) {}  // NOLINT
  Rational(long num, long den);
  Rational(const Integer& num, const Integer& den);
  explicit Rational(const mpq_class& v) : v_(v) { v_.canonicalize(); }

  // Accepts "a", "-a", "a/b".
  static Rational parse(std::string_view s);

  const mpq_class& raw() const { return v_; }
  Integer num() const { return v_.get_num(); }
  Integer den() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }
  double to_double() const { return v_.get_d(); }
  long double to_long_double() const;
  std::string to_string() const { return v_.get_str(); }

  Integer floor() const;
  // Representative in [0, 1).
  Rational frac() const;
  // Representative in [-1/2, 1/2).
  Rational centered() const;

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const { Rational r; r.v_ = -v_; return r; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

private:
  mpq_class v_;
};

Rational abs(const Rational& r);
Rational pow(const Rational& base, long e);
Integer lcm(const Integer& a, const Integer& b);
long to_long(const Integer& z);

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace sdw
