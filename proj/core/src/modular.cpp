#include "sdw/modular.hpp"

#include <algorithm>
#include <deque>
#include <random>
#include <set>
#include <sstream>

#include "sdw/errors.hpp"
#include "sdw/instanton.hpp"
#include "sdw/seeley.hpp"

namespace sdw {

namespace {

const Rational kHalf(1, 2);

bool point_less(const OrbitPoint& a, const OrbitPoint& b) {
  if (a.p != b.p) return a.p < b.p;
  return a.q < b.q;
}

}  // namespace

OrbitPoint reduce(const Characteristics& c) { return {c.p.frac(), c.q.frac()}; }

OrbitPoint act_S(const OrbitPoint& pt) { return reduce({-pt.q, pt.p}); }

OrbitPoint act_T(const OrbitPoint& pt) { return reduce({pt.p, pt.q + pt.p + kHalf}); }

std::size_t Orbit::n0() const {
  return static_cast<std::size_t>(std::count_if(points.begin(), points.end(), [](const OrbitPoint& x) { return x.p.is_zero(); }));
}

bool Orbit::contains(const OrbitPoint& pt) const {
  return std::binary_search(points.begin(), points.end(), reduce(pt), point_less);
}

Orbit orbit(const Characteristics& seed) {
  auto cmp = [](const OrbitPoint& a, const OrbitPoint& b) { return point_less(a, b); };
  std::set<OrbitPoint, decltype(cmp)> seen(cmp);
  std::deque<OrbitPoint> queue{reduce(seed)};
  seen.insert(queue.front());
  while (!queue.empty()) {
    OrbitPoint x = queue.front();
    queue.pop_front();
    for (const OrbitPoint& y : {act_S(x), act_T(x)})
      if (seen.insert(y).second) queue.push_back(y);
  }
  return Orbit{{seen.begin(), seen.end()}};
}

bool is_exceptional(const Orbit& o) {
  if (o.n() == 1) return o.points[0] == OrbitPoint{kHalf, kHalf};
  if (o.n() == 3) return o.contains({Rational(0), Rational(0)});
  return false;
}

Rational valence_budget(const Orbit& o) {
  if (is_exceptional(o)) throw ExceptionalOrbit("valence budget is undefined for the exceptional orbits");
  if (o.n() < 6 * o.n0()) throw std::logic_error("orbit violates n >= 6 n0");
  return Rational(static_cast<long>(o.n()), 12) - Rational(static_cast<long>(o.n0()), 2);
}

Rational expected_theta_valuation(const Rational& p) {
  Rational c = p.centered();
  return c * c / Rational(2);
}

std::optional<Rational> expected_dq_theta_valuation(const Characteristics& ch) {
  Rational p = ch.p.frac(), q = ch.q.frac();
  if ((p.is_zero() && (q.is_zero() || q == kHalf)) || (p == kHalf && q.is_zero())) return std::nullopt;
  if (p.is_zero()) return kHalf;
  return expected_theta_valuation(p);
}

Rational expected_a0_valuation(const Characteristics& c) {
  if (is_degenerate(c) || (c.p.frac() == kHalf && c.q.frac() == kHalf))
    throw DomainError("a0 is undefined at a degenerate characteristic");
  // 2 v(theta2) + 2 v(theta3) + 2 v(theta4) + v(theta[p,q]) + v[p+1/2,q] + v[p+1/2,q+1/2]
  //   + v[p,q+1/2] - 4 v[p,q], with v[.,.] the order of dq theta.
  auto v = [](const Rational& p, const Rational& q) { return *expected_dq_theta_valuation({p, q}); };
  return Rational(1, 4) + expected_theta_valuation(c.p) + v(c.p + kHalf, c.q) + v(c.p + kHalf, c.q + kHalf) +
         v(c.p, c.q + kHalf) - Rational(4) * v(c.p, c.q);
}

PuiseuxSeries delta_series(long trunc) {
  // q * prod (1 - q^n)^24, coefficients through q^(trunc-1).
  std::vector<Integer> c(static_cast<size_t>(std::max(trunc, 1L)), Integer(0));
  c[0] = 1;  // coefficient of q^0 in the product
  for (long n = 1; n < trunc; ++n)
    for (int rep = 0; rep < 24; ++rep)
      for (long k = trunc - 1; k >= n; --k) c[static_cast<size_t>(k)] -= c[static_cast<size_t>(k - n)];
  PuiseuxSeries s(1, 1, Grade{}, trunc);
  for (long k = 0; k + 1 < trunc; ++k)
    if (c[static_cast<size_t>(k)] != 0) s.add_term(Rational(k + 1), Cyclotomic(Rational(c[static_cast<size_t>(k)], Integer(1))));
  return s;
}

Rational bernoulli(int n) {
  // Akiyama-Tanigawa.
  std::vector<Rational> a(static_cast<size_t>(n) + 1);
  for (int m = 0; m <= n; ++m) {
    a[static_cast<size_t>(m)] = Rational(1, m + 1);
    for (int j = m; j >= 1; --j)
      a[static_cast<size_t>(j - 1)] = Rational(j) * (a[static_cast<size_t>(j - 1)] - a[static_cast<size_t>(j)]);
  }
  // This gives B_1 = +1/2; only even n are used here.
  return a[0];
}

PuiseuxSeries eisenstein_series(int k, long trunc) {
  if (k < 4 || k % 2) throw InvalidParameters("Eisenstein series need even weight >= 4");
  Rational f = Rational(-2 * k) / bernoulli(k);
  PuiseuxSeries s(1, 1, Grade{}, trunc);
  s.add_term(Rational(0), Cyclotomic(Rational(1)));
  for (long n = 1; n < trunc; ++n) {
    Integer sigma(0);
    for (long d = 1; d <= n; ++d)
      if (n % d == 0) {
        Integer dp;
        mpz_ui_pow_ui(dp.get_mpz_t(), static_cast<unsigned long>(d), static_cast<unsigned long>(k - 1));
        sigma += dp;
      }
    s.add_term(Rational(n), Cyclotomic(f * Rational(sigma, Integer(1))));
  }
  return s;
}

Rational g_normalization(int k) {
  if (k == 0) return Rational(1);
  if (k < 2 || k % 2) throw InvalidParameters("G_k normalization needs even k >= 2");
  // 2 zeta(k) = (-1)^(k/2+1) B_k (2 pi)^k / k!
  Integer fact(1), two(1);
  for (int i = 2; i <= k; ++i) fact *= i;
  for (int i = 0; i < k; ++i) two *= 2;
  Rational r = bernoulli(k) * Rational(two, fact);
  return (k / 2) % 2 == 0 ? -r : r;
}

std::array<long, 4> word_matrix(const Word& w) {
  std::array<long, 4> m{1, 0, 0, 1};
  for (char ch : w.letters) {
    std::array<long, 4> g;
    if (ch == 'S') g = {0, -1, 1, 0};
    else if (ch == 'T') g = {1, 1, 0, 1};
    else throw InvalidParameters(std::string("unknown generator letter: ") + ch);
    m = {m[0] * g[0] + m[1] * g[2], m[0] * g[1] + m[1] * g[3], m[2] * g[0] + m[3] * g[2], m[2] * g[1] + m[3] * g[3]};
  }
  return m;
}

Complex act_tau(const Word& w, Complex tau) {
  auto m = word_matrix(w);
  return (static_cast<double>(m[0]) * tau + static_cast<double>(m[1])) /
         (static_cast<double>(m[2]) * tau + static_cast<double>(m[3]));
}

OrbitPoint act_params(const Word& w, const OrbitPoint& pt) {
  OrbitPoint x = reduce(pt);
  for (char ch : w.letters) x = ch == 'S' ? act_S(x) : act_T(x);
  return x;
}

std::vector<Complex> sample_mus(int samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> re(0.7, 2.0), im(-0.3, 0.3);
  std::vector<Complex> out;
  for (int i = 0; i < samples; ++i) {
    double a = re(rng);
    double b = im(rng);
    out.emplace_back(a, b);
  }
  return out;
}

double relative_residual(Complex a, Complex b) {
  const Real scale = std::max({std::abs(a), std::abs(b), Real(kResidualFloor)});
  return static_cast<double>(std::abs(a - b) / scale);
}

ModularityReport vv_modularity_report(const Orbit& o, int order, const std::vector<Word>& words, int samples,
                                      std::uint64_t seed) {
  ModularityReport rep;
  const Complex i(0, 1);
  for (const Complex& mu : sample_mus(samples, seed)) {
    const Complex tau = i * mu;
    for (const Word& w : words) {
      auto m = word_matrix(w);
      Complex j = static_cast<double>(m[2]) * tau + static_cast<double>(m[3]);
      Complex mu2 = -i * act_tau(w, tau);
      for (const OrbitPoint& x : o.points) {
        Complex lhs = coefficient_value(frame_two_param_jet(x, mu2), order);
        Complex rhs = j * j * coefficient_value(frame_two_param_jet(act_params(w, x), mu), order);
        double r = relative_residual(lhs, rhs);
        ++rep.checks;
        if (r >= rep.max_residual) {
          rep.max_residual = r;
          std::ostringstream os;
          os << "word '" << w.letters << "' at (" << x.p << "," << x.q << "), mu=" << mu.real() << "+" << mu.imag() << "i";
          rep.worst = os.str();
        }
      }
    }
  }
  return rep;
}

ModularityReport one_param_report(Complex q0, int order, int samples, std::uint64_t seed, double C) {
  if (q0 == Complex(0)) throw InvalidParameters("q0 must be nonzero");
  Complex s;
  switch (order) {
    case 0: s = -std::pow(q0, 4); break;
    case 2: s = q0 * q0; break;
    case 4: s = -1.0; break;
    default: throw InvalidParameters("order must be 0, 2 or 4");
  }
  const Complex i(0, 1);
  ModularityReport rep;
  auto record = [&](double r, const char* law, Complex mu) {
    ++rep.checks;
    if (r >= rep.max_residual) {
      rep.max_residual = r;
      std::ostringstream os;
      os << law << "-law at mu=" << mu.real() << "+" << mu.imag() << "i";
      rep.worst = os.str();
    }
  };
  for (const Complex& mu : sample_mus(samples, seed)) {
    Complex lhs = coefficient_value(frame_one_param_jet(q0, mu - i, C), order);
    Complex rhs = coefficient_value(frame_one_param_jet(q0 - i, mu, C), order);
    record(relative_residual(lhs, rhs), "T", mu);
    lhs = coefficient_value(frame_one_param_jet(q0, 1.0 / mu, C), order);
    rhs = s * mu * mu * coefficient_value(frame_one_param_jet(1.0 / q0, mu, C), order);
    record(relative_residual(lhs, rhs), "S", mu);
  }
  return rep;
}

}  // namespace sdw
