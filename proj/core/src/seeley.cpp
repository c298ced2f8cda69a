#include "sdw/seeley.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <thread>
#include <utility>

#include "sdw/errors.hpp"

namespace sdw {

namespace {

template <class T>
struct Algebra;

template <>
struct Algebra<Complex> {
  static Complex inv(const Complex& x) {
    if (std::abs(x) == 0.0) throw DomainError("coefficient denominator vanishes");
    return 1.0 / x;
  }
  static Complex scale(const Complex& x, const Rational& r) { return x * r.to_long_double(); }
};

template <>
struct Algebra<TaylorJet<1>> {
  static TaylorJet<1> inv(const TaylorJet<1>& x) { return TaylorJet<1>(1.0) / x; }
  static TaylorJet<1> scale(const TaylorJet<1>& x, const Rational& r) { return x * Complex(r.to_long_double()); }
};

template <>
struct Algebra<PuiseuxSeries> {
  static PuiseuxSeries inv(const PuiseuxSeries& x) {
    if (x.terms().empty()) throw DomainError("coefficient denominator series vanishes to working precision");
    return invert(x);
  }
  static PuiseuxSeries scale(const PuiseuxSeries& x, const Rational& r) { return x * r; }
};

bool is_base(int i) { return i < 3 || i == f_var(0); }
int base_of(int i) { return i < 15 ? i % 3 : f_var(0); }

// Evaluates sum_t c_t prod_i v_i^e_i. Each monomial is rewritten as
// (w1^a1 w2^a2 w3^a3 F^f) * prod (v_i / base_i)^e_i; terms sharing the base
// monomial are summed before the single multiplication by it, and ratio
// monomials share prefix products.
template <class T>
class GroupedEvaluator {
public:
  explicit GroupedEvaluator(const std::array<const T*, kNumVars>& v) : v_(v) {}

  T run(TermTable table) {
    using Key = std::array<int, 4>;
    std::map<Key, std::optional<T>> group;
    std::map<Key, Rational> group_const;
    for (const Term& t : table) {
      Key key{0, 0, 0, 0};
      std::vector<std::pair<int, int>> ratio;
      for (int i = 0; i < kNumVars; ++i) {
        int e = t.exps[i];
        if (e == 0) continue;
        int b = base_of(i);
        key[b == f_var(0) ? 3 : b] += e;
        if (!is_base(i)) ratio.emplace_back(i, e);
      }
      Rational c(t.num, t.den);
      if (ratio.empty()) {
        group_const[key] += c;
        group.try_emplace(key);
        continue;
      }
      T term = Algebra<T>::scale(ratio_monomial(ratio), c);
      auto& slot = group[key];
      if (slot) *slot = *slot + term;
      else slot = std::move(term);
    }
    std::optional<T> total;
    for (auto& [key, sum] : group) {
      T base = base_monomial(key);
      auto cit = group_const.find(key);
      std::optional<T> part;
      if (sum) part = base * *sum;
      if (cit != group_const.end() && !cit->second.is_zero()) {
        T cpart = Algebra<T>::scale(base, cit->second);
        part = part ? *part + cpart : cpart;
      }
      if (!part) continue;
      total = total ? *total + *part : *part;
    }
    if (!total) throw std::logic_error("empty term table");
    return *total;
  }

private:
  const T& inverse(int i) {
    auto it = inv_.find(i);
    if (it == inv_.end()) it = inv_.emplace(i, Algebra<T>::inv(*v_[i])).first;
    return it->second;
  }

  const T& ratio_var(int i) {
    auto it = ratio_.find(i);
    if (it == ratio_.end()) it = ratio_.emplace(i, *v_[i] * inverse(base_of(i))).first;
    return it->second;
  }

  // x_i^e for a base variable (x_i = v_i) or a ratio variable.
  const T& power(int i, int e) {
    auto key = std::make_pair(i, e);
    auto it = pow_.find(key);
    if (it != pow_.end()) return it->second;
    const T& unit = is_base(i) ? (e > 0 ? *v_[i] : inverse(i)) : (e > 0 ? ratio_var(i) : inverse_ratio(i));
    int step = e > 0 ? 1 : -1;
    T val = (e == step) ? unit : power(i, e - step) * unit;
    return pow_.emplace(key, std::move(val)).first->second;
  }

  const T& inverse_ratio(int i) {
    auto it = inv_ratio_.find(i);
    if (it == inv_ratio_.end()) it = inv_ratio_.emplace(i, Algebra<T>::inv(ratio_var(i))).first;
    return it->second;
  }

  const T& ratio_monomial(const std::vector<std::pair<int, int>>& factors) {
    auto it = mono_.find(factors);
    if (it != mono_.end()) return it->second;
    T val = factors.size() == 1
                ? power(factors[0].first, factors[0].second)
                : ratio_monomial({factors.begin(), factors.end() - 1}) * power(factors.back().first, factors.back().second);
    return mono_.emplace(factors, std::move(val)).first->second;
  }

  T base_monomial(const std::array<int, 4>& key) {
    std::optional<T> acc;
    const int vars[4] = {0, 1, 2, f_var(0)};
    for (int b = 0; b < 4; ++b) {
      if (key[b] == 0) continue;
      const T& p = power(vars[b], key[b]);
      acc = acc ? *acc * p : p;
    }
    if (!acc) return *v_[0] * inverse(0);  // the constant 1 in T's representation
    return *acc;
  }

  std::array<const T*, kNumVars> v_;
  std::map<int, T> inv_, ratio_, inv_ratio_;
  std::map<std::pair<int, int>, T> pow_;
  std::map<std::vector<std::pair<int, int>>, T> mono_;
};

template <class T>
T evaluate(TermTable table, const std::array<const T*, kNumVars>& v) {
  return GroupedEvaluator<T>(v).run(table);
}

std::array<const PuiseuxSeries*, kNumVars> series_vars(const SeriesFrame& f) {
  std::array<const PuiseuxSeries*, kNumVars> v{};
  for (int k = 0; k <= 4; ++k) {
    for (int j = 1; j <= 3; ++j) v[w_var(j, k)] = &f.w[j - 1][k];
    v[f_var(k)] = &f.F[k];
  }
  return v;
}

}  // namespace

PuiseuxSeries coefficient_series(const SeriesFrame& frame, int order) {
  PuiseuxSeries s = evaluate(coefficient_terms(order), series_vars(frame));
  if (!(s.grade() == coefficient_grade(order))) throw std::logic_error("coefficient grade bookkeeping mismatch");
  return s;
}

Complex coefficient_value(const JetFrame& frame, int order) {
  std::array<Complex, kNumVars> vals{};
  for (int k = 0; k <= 4; ++k) {
    for (int j = 1; j <= 3; ++j) vals[w_var(j, k)] = frame.w[j - 1][static_cast<size_t>(k)];
    vals[f_var(k)] = frame.F[static_cast<size_t>(k)];
  }
  std::array<const Complex*, kNumVars> v{};
  for (int i = 0; i < kNumVars; ++i) v[i] = &vals[i];
  return evaluate(coefficient_terms(order), v);
}

TaylorJet<1> coefficient_jet(const JetFrame& frame, int order) {
  std::array<TaylorJet<1>, kNumVars> vals{};
  auto pair = [](const TaylorJet<5>& j, int k) {
    TaylorJet<1> r;
    r[0] = j[static_cast<size_t>(k)];
    r[1] = j[static_cast<size_t>(k + 1)];
    return r;
  };
  for (int k = 0; k <= 4; ++k) {
    for (int j = 1; j <= 3; ++j) vals[w_var(j, k)] = pair(frame.w[j - 1], k);
    vals[f_var(k)] = pair(frame.F, k);
  }
  std::array<const TaylorJet<1>*, kNumVars> v{};
  for (int i = 0; i < kNumVars; ++i) v[i] = &vals[i];
  return evaluate(coefficient_terms(order), v);
}

Complex coefficient_value_naive(const JetFrame& frame, int order) {
  Complex total = 0;
  for (const Term& t : coefficient_terms(order)) {
    Complex m = static_cast<double>(t.num) / static_cast<double>(t.den);
    for (int i = 0; i < kNumVars; ++i) {
      if (t.exps[i] == 0) continue;
      Complex x = i < 15 ? frame.w[i % 3][static_cast<size_t>(i / 3)] : frame.F[static_cast<size_t>(i - 15)];
      m *= std::pow(x, t.exps[i]);
    }
    total += m;
  }
  return total;
}

PuiseuxSeries point_series(const Characteristics& pt, int order, const Rational& trunc) {
  (void)coefficient_terms(order);
  // Cancellations between terms cost relative precision; widen until the
  // assembled coefficient is known below trunc.
  Rational work = trunc + Rational(2);
  for (int attempt = 0; attempt < 8; ++attempt) {
    PuiseuxSeries s = coefficient_series(frame_two_param_series(pt, work), order);
    auto t = s.truncation();
    if (!t || *t >= trunc) return s.truncated(trunc);
    work += (trunc - *t) + Rational(1, 2);
  }
  throw std::runtime_error("working precision did not converge");
}

PuiseuxSeries orbit_sum_series(std::span<const Characteristics> points, int order, const Rational& trunc) {
  if (points.empty()) throw InvalidParameters("empty orbit");
  for (const auto& pt : points)
    if (is_degenerate(pt)) throw ExceptionalOrbit("orbit contains a degenerate point");
  std::vector<std::optional<PuiseuxSeries>> parts(points.size());
  unsigned workers = std::max(1u, std::min<unsigned>(std::thread::hardware_concurrency(), static_cast<unsigned>(points.size())));
  if (workers == 1) {
    for (size_t i = 0; i < points.size(); ++i) parts[i] = point_series(points[i], order, trunc);
  } else {
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(workers);
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          for (size_t i = w; i < points.size(); i += workers) parts[i] = point_series(points[i], order, trunc);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
    for (auto& t : pool) t.join();
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
  }
  PuiseuxSeries sum = *parts[0];
  for (size_t i = 1; i < parts.size(); ++i) sum += *parts[i];

  if (!trunc.is_integer()) throw InvalidParameters("orbit sums need an integer truncation");
  PuiseuxSeries out(1, 1, sum.grade(), to_long(trunc.num()));
  for (const auto& [k, c] : sum.terms()) {
    Rational e(k, sum.den());
    if (!e.is_integer()) throw std::logic_error("fractional exponent survives in an orbit sum");
    if (!c.is_rational()) throw std::logic_error("non-rational coefficient survives in an orbit sum");
    out.add_term(e, Cyclotomic(c.to_rational()));
  }
  return out;
}

Complex orbit_sum_value(std::span<const Characteristics> points, int order, Complex mu, double tol) {
  Complex s = 0;
  for (const auto& pt : points) s += coefficient_value(frame_two_param_jet(pt, mu, tol), order);
  return s;
}

}  // namespace sdw
