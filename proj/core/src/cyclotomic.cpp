#include "sdw/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace sdw {

struct Cyclotomic::Field {
  long order;
  long phi;
  std::vector<long> poly;  // monic, degree phi
};

namespace {

std::vector<long> poly_div_exact(std::vector<long> num, const std::vector<long>& den) {
  // den is monic.
  size_t dn = den.size() - 1;
  std::vector<long> q(num.size() - dn, 0);
  for (size_t k = num.size(); k-- > dn;) {
    long c = num[k];
    q[k - dn] = c;
    if (c != 0)
      for (size_t j = 0; j <= dn; ++j) num[k - dn + j] -= c * den[j];
  }
  return q;
}

std::mutex& field_mutex() {
  static std::mutex m;
  return m;
}

std::map<long, std::unique_ptr<Cyclotomic::Field>>& field_table() {
  static std::map<long, std::unique_ptr<Cyclotomic::Field>> t;
  return t;
}

std::vector<long> compute_cyclotomic(long n) {
  // x^n - 1 divided by Phi_d for every proper divisor d.
  std::vector<long> p(static_cast<size_t>(n) + 1, 0);
  p[0] = -1;
  p[static_cast<size_t>(n)] = 1;
  for (long d = 1; d < n; ++d)
    if (n % d == 0) p = poly_div_exact(p, cyclotomic_polynomial(d));
  return p;
}

const Cyclotomic::Field* field_for(long n) {
  if (n < 1) throw std::invalid_argument("cyclotomic order must be positive");
  {
    std::lock_guard lock(field_mutex());
    auto it = field_table().find(n);
    if (it != field_table().end()) return it->second.get();
  }
  // Computed outside the lock: cyclotomic_polynomial recurses into field_for.
  auto poly = compute_cyclotomic(n);
  auto f = std::make_unique<Cyclotomic::Field>();
  f->order = n;
  f->phi = static_cast<long>(poly.size()) - 1;
  f->poly = std::move(poly);
  std::lock_guard lock(field_mutex());
  auto [it, inserted] = field_table().emplace(n, std::move(f));
  return it->second.get();
}

// Reduce a wide coefficient vector modulo the monic polynomial in place.
void reduce_wide(std::vector<mpq_class>& w, const Cyclotomic::Field& f) {
  const size_t phi = static_cast<size_t>(f.phi);
  mpq_class t;
  for (size_t k = w.size(); k-- > phi;) {
    if (sgn(w[k]) == 0) continue;
    for (size_t j = 0; j < phi; ++j) {
      long pj = f.poly[j];
      if (pj == 0) continue;
      if (pj == 1) {
        w[k - phi + j] -= w[k];
      } else if (pj == -1) {
        w[k - phi + j] += w[k];
      } else {
        t = w[k] * pj;
        w[k - phi + j] -= t;
      }
    }
    w[k] = 0;
  }
  w.resize(phi);
}

}  // namespace

const std::vector<long>& cyclotomic_polynomial(long n) { return field_for(n)->poly; }

long euler_phi(long n) { return field_for(n)->phi; }

Cyclotomic::Cyclotomic(long order)
    : field_(field_for(order)), order_(order), c_(static_cast<size_t>(field_->phi)) {}

Cyclotomic::Cyclotomic(const Rational& r, long order) : Cyclotomic(order) { c_[0] = r; }

Cyclotomic Cyclotomic::zeta(long order, long k) {
  k %= order;
  if (k < 0) k += order;
  Cyclotomic z(order);
  std::vector<mpq_class> w(static_cast<size_t>(std::max(k + 1, z.field_->phi)));
  w[static_cast<size_t>(k)] = 1;
  reduce_wide(w, *z.field_);
  for (size_t i = 0; i < w.size(); ++i) z.c_[i] = Rational(w[i]);
  return z;
}

Cyclotomic Cyclotomic::embed(long target) const {
  if (target == order_) return *this;
  if (target % order_ != 0) throw std::invalid_argument("embedding target not a multiple of order");
  long step = target / order_;
  Cyclotomic r(target);
  std::vector<mpq_class> w(static_cast<size_t>(std::max<long>(r.field_->phi, step * (field_->phi - 1) + 1)));
  for (size_t j = 0; j < c_.size(); ++j) w[j * static_cast<size_t>(step)] = c_[j].raw();
  reduce_wide(w, *r.field_);
  for (size_t i = 0; i < w.size(); ++i) r.c_[i] = Rational(w[i]);
  return r;
}

bool Cyclotomic::is_zero() const {
  for (const auto& x : c_)
    if (!x.is_zero()) return false;
  return true;
}

bool Cyclotomic::is_rational() const {
  for (size_t i = 1; i < c_.size(); ++i)
    if (!c_[i].is_zero()) return false;
  return true;
}

Rational Cyclotomic::to_rational() const {
  if (!is_rational()) throw std::domain_error("cyclotomic value is not rational");
  return c_[0];
}

std::complex<long double> Cyclotomic::to_complex() const {
  using R = long double;
  std::complex<R> s = 0;
  for (size_t j = 0; j < c_.size(); ++j) {
    if (c_[j].is_zero()) continue;
    R ang = 2 * std::numbers::pi_v<R> * static_cast<R>(j) / static_cast<R>(order_);
    s += c_[j].to_long_double() * std::polar(R(1), ang);
  }
  return s;
}

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero in cyclotomic field");
  const size_t n = c_.size();
  if (n == 1) return Cyclotomic(Rational(1) / c_[0], order_);
  // Columns: this * zeta^j. Solve M x = e_0 by Gauss-Jordan elimination.
  std::vector<std::vector<mpq_class>> m(n, std::vector<mpq_class>(n + 1));
  for (size_t j = 0; j < n; ++j) {
    Cyclotomic col = *this * zeta(order_, static_cast<long>(j));
    for (size_t i = 0; i < n; ++i) m[i][j] = col.c_[i].raw();
  }
  m[0][n] = 1;
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && sgn(m[piv][col]) == 0) ++piv;
    if (piv == n) throw std::domain_error("singular multiplication matrix");
    std::swap(m[piv], m[col]);
    mpq_class inv = 1 / m[col][col];
    for (size_t k = col; k <= n; ++k) m[col][k] *= inv;
    for (size_t r = 0; r < n; ++r) {
      if (r == col || sgn(m[r][col]) == 0) continue;
      mpq_class f = m[r][col];
      for (size_t k = col; k <= n; ++k) m[r][k] -= f * m[col][k];
    }
  }
  Cyclotomic out(order_);
  for (size_t i = 0; i < n; ++i) out.c_[i] = Rational(m[i][n]);
  return out;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
  if (o.order_ != order_) {
    long l = std::lcm(order_, o.order_);
    if (l != order_) *this = embed(l);
    return *this += o.embed(l);
  }
  for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) { return *this += -o; }

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic r(*this);
  for (auto& x : r.c_) x = -x;
  return r;
}

Cyclotomic& Cyclotomic::operator*=(const Rational& r) {
  for (auto& x : c_) x *= r;
  return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) {
  if (o.order_ != order_) {
    long l = std::lcm(order_, o.order_);
    if (l != order_) *this = embed(l);
    return *this *= o.embed(l);
  }
  Cyclotomic acc(order_);
  fma(acc, *this, o);
  *this = std::move(acc);
  return *this;
}

void Cyclotomic::fma(Cyclotomic& acc, const Cyclotomic& b, const Cyclotomic& c) {
  const size_t n = b.c_.size();
  if (n == 1) {
    acc.c_[0] += b.c_[0] * c.c_[0];
    return;
  }
  thread_local std::vector<mpq_class> wide;
  thread_local mpq_class t;
  wide.assign(2 * n - 1, mpq_class(0));
  bool any = false;
  for (size_t i = 0; i < n; ++i) {
    if (b.c_[i].is_zero()) continue;
    for (size_t j = 0; j < n; ++j) {
      if (c.c_[j].is_zero()) continue;
      mpq_mul(t.get_mpq_t(), b.c_[i].raw().get_mpq_t(), c.c_[j].raw().get_mpq_t());
      wide[i + j] += t;
      any = true;
    }
  }
  if (!any) return;
  reduce_wide(wide, *b.field_);
  for (size_t i = 0; i < n; ++i)
    if (sgn(wide[i]) != 0) acc.c_[i] += Rational(wide[i]);
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  return a.order_ == b.order_ && a.c_ == b.c_;
}

bool equal_value(const Cyclotomic& a, const Cyclotomic& b) {
  long l = std::lcm(a.order(), b.order());
  return a.embed(l) == b.embed(l);
}

std::string Cyclotomic::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (size_t j = 0; j < c_.size(); ++j) {
    if (c_[j].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << c_[j] << ")";
    if (j > 0) os << "*z" << order_ << "^" << j;
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace sdw
