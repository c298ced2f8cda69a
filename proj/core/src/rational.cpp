#include "sdw/rational.hpp"

#include <cctype>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace sdw {

Rational::Rational(long num, long den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  v_ = mpq_class(num, 1) / mpq_class(den, 1);
}

Rational::Rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational Rational::parse(std::string_view s) {
  std::string str(s);
  while (!str.empty() && std::isspace(static_cast<unsigned char>(str.back()))) str.pop_back();
  size_t start = 0;
  while (start < str.size() && std::isspace(static_cast<unsigned char>(str[start]))) ++start;
  str = str.substr(start);
  if (str.empty()) throw std::invalid_argument("empty rational literal");
  auto slash = str.find('/');
  Integer num, den(1);
  try {
    if (slash == std::string::npos) {
      if (num.set_str(str, 10) != 0) throw std::invalid_argument("");
    } else {
      if (num.set_str(str.substr(0, slash), 10) != 0 || den.set_str(str.substr(slash + 1), 10) != 0)
        throw std::invalid_argument("");
    }
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("malformed rational literal: " + std::string(s));
  }
  if (den == 0) throw std::invalid_argument("zero denominator in: " + std::string(s));
  return Rational(num, den);
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("rational division by zero");
  v_ /= o.v_;
  return *this;
}

Integer Rational::floor() const {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
  return q;
}

Rational Rational::frac() const { return *this - Rational(floor(), Integer(1)); }

Rational Rational::centered() const {
  Rational f = frac();
  if (f >= Rational(1, 2)) f -= Rational(1);
  return f;
}

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

Rational pow(const Rational& base, long e) {
  if (e < 0) return pow(Rational(1) / base, -e);
  Integer n, d;
  mpz_pow_ui(n.get_mpz_t(), base.raw().get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(d.get_mpz_t(), base.raw().get_den_mpz_t(), static_cast<unsigned long>(e));
  return Rational(n, d);
}

Integer lcm(const Integer& a, const Integer& b) {
  Integer r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

long to_long(const Integer& z) {
  if (!z.fits_slong_p()) throw std::overflow_error("integer does not fit in long");
  return z.get_si();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

long double Rational::to_long_double() const {
  const mpz_class& n = v_.get_num();
  const mpz_class& d = v_.get_den();
  if (n.fits_slong_p() && d.fits_slong_p())
    return static_cast<long double>(n.get_si()) / static_cast<long double>(d.get_si());
  return v_.get_d();
}

}  // namespace sdw
