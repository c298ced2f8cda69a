#include <set>
#include <sstream>

#include "sdw/errors.hpp"
#include "sdw/modular.hpp"

namespace sdw {

namespace {

const std::set<int> kEisensteinOnly{4, 6, 8, 10, 14};
const std::set<int> kOneCusp{12, 16, 18, 20, 22, 26};

PuiseuxSeries multiplier_series(const Multiplier& m, long trunc) {
  PuiseuxSeries out = PuiseuxSeries::constant(Cyclotomic(Rational(1))).truncated(Rational(trunc));
  for (int i = 0; i < m.delta; ++i) out = out * delta_series(trunc);
  for (int i = 0; i < m.e4; ++i) out = out * eisenstein_series(4, trunc);
  for (int i = 0; i < m.e6; ++i) out = out * eisenstein_series(6, trunc);
  return out.truncated(Rational(trunc));
}

// Basis element of the one-dimensional target space; kb is its Eisenstein weight (0: bare Delta).
PuiseuxSeries basis_series(int k, bool cusp, long trunc, int& kb) {
  if (!cusp) {
    kb = k;
    return eisenstein_series(k, trunc);
  }
  kb = k - 12;
  if (kb == 0) return delta_series(trunc);
  return (delta_series(trunc) * eisenstein_series(kb, trunc)).truncated(Rational(trunc));
}

std::string power(const std::string& name, int e) {
  if (e == 1) return name;
  return name + "^" + std::to_string(e);
}

std::string target_name(const Multiplier& m, bool cusp, int kb) {
  std::string num;
  if (cusp) num = kb == 0 ? "Delta" : "Delta*G" + std::to_string(kb);
  else num = "G" + std::to_string(kb);
  std::vector<std::string> den;
  if (m.delta) den.push_back(power("Delta", m.delta));
  if (m.e4) den.push_back(power("G4", m.e4));
  if (m.e6) den.push_back(power("G6", m.e6));
  if (den.empty()) return num;
  std::string d;
  for (std::size_t i = 0; i < den.size(); ++i) d += (i ? "*" : "") + den[i];
  return num + "/" + (den.size() > 1 ? "(" + d + ")" : d);
}

std::optional<IdentificationResult> try_multiplier(const PuiseuxSeries& s, const Multiplier& m) {
  const Rational t = *s.truncation();
  const long hi = to_long(t.floor()) + 2 * m.delta + 4;
  PuiseuxSeries prod = (s * multiplier_series(m, hi)).normalized();
  auto tp = prod.truncation();
  auto v = prod.valuation();
  if (!tp || !v || !v->is_integer()) return std::nullopt;
  const int k = 2 + m.weight();
  bool cusp;
  if (*v == Rational(0) && kEisensteinOnly.count(k)) cusp = false;
  else if (*v >= Rational(1) && kOneCusp.count(k)) cusp = true;
  else return std::nullopt;
  // Require a few coefficients beyond the leading one to agree.
  if (*tp - *v < Rational(3)) return std::nullopt;
  int kb = 0;
  PuiseuxSeries basis = basis_series(k, cusp, to_long(tp->floor()) + 2, kb);
  Cyclotomic b0 = basis.coeff(*v);
  if (b0.is_zero()) return std::nullopt;
  Rational c = prod.coeff(*v).to_rational() / b0.to_rational();
  for (long e = to_long(prod.valuation()->floor()); Rational(e) < *tp; ++e) {
    Rational lhs = prod.coeff(Rational(e)).to_rational();
    Rational rhs = c * basis.coeff(Rational(e)).to_rational();
    if (lhs != rhs) return std::nullopt;
  }
  IdentificationResult r;
  r.multiplier = m;
  r.weight = k;
  r.cusp = cusp;
  r.eisenstein = kb;
  r.rational_constant = c;
  r.constant = c * pow(g_normalization(4), m.e4) * pow(g_normalization(6), m.e6) / g_normalization(kb);
  r.grade = Grade{s.grade().pi - kb + 4 * m.e4 + 6 * m.e6, s.grade().lambda};
  r.target = target_name(m, cusp, kb);
  return r;
}

}  // namespace

IdentificationResult identify(const PuiseuxSeries& series, const Orbit&) {
  if (!series.truncation()) throw IdentificationFailed("identification needs a truncated series");
  if (!series.is_rational() || series.den() != 1) throw IdentificationFailed("series is not a rational q-series");
  if (!series.valuation()) throw IdentificationFailed("series has no known nonzero coefficient");
  std::vector<Multiplier> order{{1, 0, 0}, {0, 4, 0}};
  for (int a = 0; a <= 2; ++a)
    for (int b = 0; b <= 4; ++b)
      for (int c = 0; c <= 2; ++c) order.push_back({a, b, c});
  for (const Multiplier& m : order)
    if (auto r = try_multiplier(series, m)) return *r;
  throw IdentificationFailed("no multiplier Delta^a E4^b E6^c with a<=2, b<=4, c<=2 gives a constant ratio");
}

PuiseuxSeries reconstruct(const IdentificationResult& r, long trunc, Grade grade) {
  const long hi = trunc + 2 * r.multiplier.delta + 4;
  int kb = 0;
  PuiseuxSeries basis = basis_series(r.weight, r.cusp, hi, kb);
  PuiseuxSeries m = multiplier_series(r.multiplier, hi);
  PuiseuxSeries out = (basis * invert(m)) * r.rational_constant;
  out = out.truncated(Rational(trunc)).normalized();
  out.set_grade(grade);
  return out;
}

}  // namespace sdw
