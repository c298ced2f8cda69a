#include "sdw/puiseux.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace sdw {

namespace {

std::optional<long> min_trunc(std::optional<long> a, std::optional<long> b) {
  if (!a) return b;
  if (!b) return a;
  return std::min(*a, *b);
}

// Numerator of e over den; throws if e is not on the grid.
long on_grid(const Rational& e, long den) {
  Rational s = e * Rational(den);
  if (!s.is_integer()) throw std::invalid_argument("exponent not on the series grid");
  return to_long(s.num());
}

long den_of(const Rational& e) { return to_long(e.den()); }

}  // namespace

PuiseuxSeries::PuiseuxSeries(long den, long field_order, Grade grade, std::optional<long> trunc)
    : den_(den), field_(field_order), grade_(grade), trunc_(trunc) {
  if (den < 1) throw std::invalid_argument("exponent denominator must be positive");
  (void)euler_phi(field_order);
}

PuiseuxSeries PuiseuxSeries::zero(Grade grade, std::optional<Rational> trunc) {
  if (!trunc) return PuiseuxSeries(1, 1, grade, std::nullopt);
  long d = den_of(*trunc);
  return PuiseuxSeries(d, 1, grade, on_grid(*trunc, d));
}

PuiseuxSeries PuiseuxSeries::constant(const Cyclotomic& c, Grade grade) {
  return monomial(Rational(0), c, grade);
}

PuiseuxSeries PuiseuxSeries::monomial(const Rational& e, const Cyclotomic& c, Grade grade) {
  PuiseuxSeries s(den_of(e), c.order(), grade, std::nullopt);
  if (!c.is_zero()) s.terms_.emplace(on_grid(e, s.den_), c);
  return s;
}

std::optional<Rational> PuiseuxSeries::truncation() const {
  if (!trunc_) return std::nullopt;
  return Rational(*trunc_, den_);
}

Cyclotomic PuiseuxSeries::coeff(const Rational& e) const {
  Rational s = e * Rational(den_);
  if (trunc_ && e >= Rational(*trunc_, den_)) throw std::out_of_range("coefficient beyond truncation");
  if (!s.is_integer()) return Cyclotomic(field_);
  auto it = terms_.find(to_long(s.num()));
  return it == terms_.end() ? Cyclotomic(field_) : it->second;
}

void PuiseuxSeries::add_term(const Rational& e, const Cyclotomic& c) {
  long d = std::lcm(den_, den_of(e));
  long n = std::lcm(field_, c.order());
  if (d != den_ || n != field_) *this = rebased(d).with_field(n);
  long k = on_grid(e, den_);
  if (trunc_ && k >= *trunc_) return;
  auto it = terms_.find(k);
  if (it == terms_.end()) {
    Cyclotomic v = c.embed(field_);
    if (!v.is_zero()) terms_.emplace(k, std::move(v));
  } else {
    it->second += c.embed(field_);
    if (it->second.is_zero()) terms_.erase(it);
  }
}

std::optional<Rational> PuiseuxSeries::valuation() const {
  for (const auto& [k, c] : terms_)
    if (!c.is_zero()) return Rational(k, den_);
  return std::nullopt;
}

PuiseuxSeries PuiseuxSeries::rebased(long den) const {
  if (den == den_) return *this;
  if (den % den_ != 0) throw std::invalid_argument("rebase target not a multiple of denominator");
  long f = den / den_;
  PuiseuxSeries r(den, field_, grade_, trunc_ ? std::optional<long>(*trunc_ * f) : std::nullopt);
  for (const auto& [k, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), k * f, c);
  return r;
}

PuiseuxSeries PuiseuxSeries::with_field(long order) const {
  if (order == field_) return *this;
  PuiseuxSeries r(den_, order, grade_, trunc_);
  for (const auto& [k, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), k, c.embed(order));
  return r;
}

PuiseuxSeries PuiseuxSeries::truncated(const Rational& t) const {
  long d = std::lcm(den_, den_of(t));
  PuiseuxSeries r = rebased(d);
  long k = on_grid(t, d);
  r.terms_.erase(r.terms_.lower_bound(k), r.terms_.end());
  r.trunc_ = min_trunc(r.trunc_, k);
  return r.normalized();
}

PuiseuxSeries PuiseuxSeries::normalized() const {
  long g = trunc_ ? std::abs(*trunc_) : 0;
  for (const auto& [k, c] : terms_)
    if (!c.is_zero()) g = std::gcd(g, std::abs(k));
  g = std::gcd(g, den_);
  if (g == 0) g = den_;
  PuiseuxSeries r(den_ / g, field_, grade_, trunc_ ? std::optional<long>(*trunc_ / g) : std::nullopt);
  for (const auto& [k, c] : terms_)
    if (!c.is_zero()) r.terms_.emplace_hint(r.terms_.end(), k / g, c);
  return r;
}

PuiseuxSeries& PuiseuxSeries::operator+=(const PuiseuxSeries& o) {
  if (!(grade_ == o.grade_)) throw std::invalid_argument("adding series of different grades");
  long d = std::lcm(den_, o.den_);
  long n = std::lcm(field_, o.field_);
  if (d != den_ || n != field_) *this = rebased(d).with_field(n);
  const PuiseuxSeries* bp = &o;
  PuiseuxSeries tmp;
  if (o.den_ != d || o.field_ != n) {
    tmp = o.rebased(d).with_field(n);
    bp = &tmp;
  }
  trunc_ = min_trunc(trunc_, bp->trunc_);
  for (const auto& [k, c] : bp->terms_) {
    auto it = terms_.find(k);
    if (it == terms_.end())
      terms_.emplace(k, c);
    else
      it->second += c;
  }
  if (trunc_) terms_.erase(terms_.lower_bound(*trunc_), terms_.end());
  std::erase_if(terms_, [](const auto& kv) { return kv.second.is_zero(); });
  return *this;
}

PuiseuxSeries& PuiseuxSeries::operator-=(const PuiseuxSeries& o) { return *this += -o; }

PuiseuxSeries PuiseuxSeries::operator-() const {
  PuiseuxSeries r(*this);
  for (auto& [k, c] : r.terms_) c = -c;
  return r;
}

PuiseuxSeries& PuiseuxSeries::operator*=(const Cyclotomic& c) {
  if (c.order() != field_) {
    long n = std::lcm(field_, c.order());
    *this = with_field(n);
    return *this *= c.embed(n);
  }
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, v] : terms_) v *= c;
  return *this;
}

PuiseuxSeries& PuiseuxSeries::operator*=(const Rational& r) {
  if (r.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, v] : terms_) v *= r;
  return *this;
}

PuiseuxSeries operator*(const PuiseuxSeries& a0, const PuiseuxSeries& b0) {
  if (a0.den_ != b0.den_ || a0.field_ != b0.field_) {
    long d = std::lcm(a0.den_, b0.den_);
    long n = std::lcm(a0.field_, b0.field_);
    return a0.rebased(d).with_field(n) * b0.rebased(d).with_field(n);
  }
  const PuiseuxSeries& a = a0;
  const PuiseuxSeries& b = b0;
  PuiseuxSeries r(a.den_, a.field_, a.grade_ + b.grade_, std::nullopt);
  auto va = a.terms_.empty() ? std::nullopt : std::optional<long>(a.terms_.begin()->first);
  auto vb = b.terms_.empty() ? std::nullopt : std::optional<long>(b.terms_.begin()->first);
  // A known-zero factor with a truncation still bounds what is known.
  std::optional<long> t;
  if (a.trunc_ && b.trunc_) {
    if (va && vb) t = std::min(*a.trunc_ + *vb, *b.trunc_ + *va);
    else if (va) t = *b.trunc_ + *va;
    else if (vb) t = *a.trunc_ + *vb;
    else t = *a.trunc_ + *b.trunc_;
  } else if (a.trunc_) {
    t = vb ? std::optional<long>(*a.trunc_ + *vb) : std::nullopt;
    if (!vb) return r;  // exact zero times anything
  } else if (b.trunc_) {
    t = va ? std::optional<long>(*b.trunc_ + *va) : std::nullopt;
    if (!va) return r;
  }
  r.trunc_ = t;
  if (!va || !vb) return r;
  long lo = *va + *vb;
  long hi = t ? *t : a.terms_.rbegin()->first + b.terms_.rbegin()->first + 1;
  if (hi <= lo) return r;
  std::vector<Cyclotomic> acc(static_cast<size_t>(hi - lo), Cyclotomic(a.field_));
  std::vector<char> touched(acc.size(), 0);
  for (const auto& [ka, ca] : a.terms_) {
    if (ka + *vb >= hi) break;
    for (const auto& [kb, cb] : b.terms_) {
      long k = ka + kb;
      if (k >= hi) break;
      Cyclotomic::fma(acc[static_cast<size_t>(k - lo)], ca, cb);
      touched[static_cast<size_t>(k - lo)] = 1;
    }
  }
  for (size_t i = 0; i < acc.size(); ++i)
    if (touched[i] && !acc[i].is_zero()) r.terms_.emplace_hint(r.terms_.end(), lo + static_cast<long>(i), std::move(acc[i]));
  return r;
}

PuiseuxSeries invert(const PuiseuxSeries& a, std::optional<Rational> trunc) {
  if (a.terms().empty()) throw std::domain_error("inverting a series with no known nonzero term");
  long D = a.den();
  long v = a.terms().begin()->first;
  const Cyclotomic& lead = a.terms().begin()->second;
  std::optional<long> t;
  if (a.trunc_num()) {
    t = *a.trunc_num() - 2 * v;
  } else if (a.terms().size() == 1) {
    return PuiseuxSeries::monomial(Rational(-v, D), lead.inverse(), Grade{} - a.grade());
  }
  if (trunc) {
    long d2 = std::lcm(D, to_long(trunc->den()));
    if (d2 != D) return invert(a.rebased(d2), trunc);
    long tk = to_long((*trunc * Rational(D)).num());
    t = t ? std::min(*t, tk) : tk;
  }
  if (!t) throw std::invalid_argument("inverting an exact non-monomial series needs a truncation");
  PuiseuxSeries r(D, a.field_order(), Grade{} - a.grade(), t);
  long len = *t + v;  // relative length
  if (len <= 0) return r;
  Cyclotomic inv = lead.inverse();
  std::vector<Cyclotomic> b(static_cast<size_t>(len), Cyclotomic(a.field_order()));
  std::vector<std::pair<long, const Cyclotomic*>> rest;
  for (auto it = std::next(a.terms().begin()); it != a.terms().end(); ++it)
    rest.emplace_back(it->first - v, &it->second);
  b[0] = inv;
  for (long k = 1; k < len; ++k) {
    Cyclotomic s(a.field_order());
    for (const auto& [j, c] : rest) {
      if (j > k) break;
      if (!b[static_cast<size_t>(k - j)].is_zero()) Cyclotomic::fma(s, *c, b[static_cast<size_t>(k - j)]);
    }
    if (!s.is_zero()) b[static_cast<size_t>(k)] = -(s * inv);
  }
  for (long k = 0; k < len; ++k)
    if (!b[static_cast<size_t>(k)].is_zero()) r.add_term(Rational(k - v, D), b[static_cast<size_t>(k)]);
  return r;
}

PuiseuxSeries operator/(const PuiseuxSeries& a, const PuiseuxSeries& b) { return a * invert(b); }

PuiseuxSeries pow(const PuiseuxSeries& a, long e) {
  if (e < 0) return pow(invert(a), -e);
  PuiseuxSeries result = PuiseuxSeries::constant(Cyclotomic(Rational(1), a.field_order()));
  PuiseuxSeries base = a;
  bool first = true;
  while (e > 0) {
    if (e & 1) {
      result = first ? base : result * base;
      first = false;
    }
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

PuiseuxSeries mu_derivative(const PuiseuxSeries& a) {
  PuiseuxSeries r(a.den(), a.field_order(), a.grade() + Grade{1, 0}, a.trunc_num());
  for (const auto& [k, c] : a.terms())
    if (k != 0) r.add_term(Rational(k, a.den()), c * Rational(-2 * k, a.den()));
  return r;
}

std::complex<long double> evaluate(const PuiseuxSeries& a, std::complex<long double> mu) {
  using R = long double;
  constexpr R pi = std::numbers::pi_v<R>;
  std::complex<R> s = 0;
  for (const auto& [k, c] : a.terms())
    s += c.to_complex() * std::exp(-2 * pi * mu * (static_cast<R>(k) / static_cast<R>(a.den())));
  return s * std::pow(pi, static_cast<R>(a.grade().pi));
}

PuiseuxSeries unit_twist(const PuiseuxSeries& a) {
  long n = std::lcm(a.field_order(), a.den());
  PuiseuxSeries r(a.den(), n, a.grade(), a.trunc_num());
  for (const auto& [k, c] : a.terms()) r.add_term(Rational(k, a.den()), c * Cyclotomic::zeta(a.den(), k));
  return r;
}

bool PuiseuxSeries::agrees_with(const PuiseuxSeries& o) const {
  if (!(grade_ == o.grade_)) return false;
  PuiseuxSeries diff = *this - o;
  return diff.terms().empty();
}

bool PuiseuxSeries::is_rational() const {
  for (const auto& [k, c] : terms_)
    if (!c.is_rational()) return false;
  return true;
}

std::string PuiseuxSeries::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "[" << c.to_string() << "]*Q^(" << Rational(k, den_) << ")";
  }
  if (first) os << "0";
  if (trunc_) os << " + O(Q^(" << Rational(*trunc_, den_) << "))";
  if (grade_.pi != 0 || grade_.lambda != 0) os << "  [pi^" << grade_.pi << " Lambda^" << grade_.lambda << "]";
  return os.str();
}

}  // namespace sdw
