#include "sdw/series_json.hpp"

#include "sdw/errors.hpp"

namespace sdw {

namespace {

Json grade_json(Grade g) { return Json{{"pi", g.pi}, {"lambda", g.lambda}}; }

Json point_json(const OrbitPoint& x) { return Json::array({x.p.to_string(), x.q.to_string()}); }

}  // namespace

Json complex_to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Json series_to_json(const PuiseuxSeries& s) {
  Json terms = Json::array();
  for (const auto& [k, c] : s.terms()) {
    if (c.is_zero()) continue;
    Json coeffs = Json::array();
    const Cyclotomic e = c.embed(s.field_order());
    for (const Rational& r : e.coeffs()) coeffs.push_back(r.to_string());
    terms.push_back(Json{{"k", k}, {"exponent", Rational(k, s.den()).to_string()}, {"coeffs", coeffs}});
  }
  Json j{{"exp_den", s.den()}, {"cyclotomic_order", s.field_order()}, {"grade", grade_json(s.grade())}, {"terms", terms}};
  j["trunc"] = s.trunc_num() ? Json(*s.trunc_num()) : Json(nullptr);
  return j;
}

PuiseuxSeries series_from_json(const Json& j) {
  try {
    const long den = j.at("exp_den").get<long>();
    const long order = j.at("cyclotomic_order").get<long>();
    if (den <= 0 || order <= 0) throw InvalidParameters("series JSON: exp_den and cyclotomic_order must be positive");
    Grade g{j.at("grade").at("pi").get<long>(), j.at("grade").at("lambda").get<long>()};
    std::optional<long> trunc;
    if (j.contains("trunc") && !j.at("trunc").is_null()) trunc = j.at("trunc").get<long>();
    PuiseuxSeries s(den, order, g, trunc);
    const auto phi = static_cast<size_t>(euler_phi(order));
    for (const Json& t : j.at("terms")) {
      const auto& cs = t.at("coeffs");
      if (cs.size() != phi) throw InvalidParameters("series JSON: coefficient vector has the wrong length");
      Cyclotomic c(order);
      for (size_t i = 0; i < phi; ++i) c[i] = Rational::parse(cs[i].get<std::string>());
      s.add_term(Rational(t.at("k").get<long>(), den), c);
    }
    return s;
  } catch (const Json::exception& e) {
    throw InvalidParameters(std::string("series JSON: ") + e.what());
  } catch (const InvalidParameters&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw InvalidParameters(std::string("series JSON: ") + e.what());
  }
}

Json coeff_result_to_json(const CoeffResult& r) {
  Json j{{"order", r.order}, {"grade", grade_json(r.grade)}};
  if (r.series) j["series"] = series_to_json(*r.series);
  if (r.mu) j["mu"] = complex_to_json(*r.mu);
  if (r.value) j["value"] = complex_to_json(*r.value);
  return j;
}

Json orbit_to_json(const Orbit& o) {
  Json pts = Json::array();
  for (const auto& x : o.points) pts.push_back(point_json(x));
  Json j{{"n", o.n()}, {"n0", o.n0()}, {"points", pts}, {"exceptional", is_exceptional(o)}};
  j["budget"] = is_exceptional(o) ? Json(nullptr) : Json(valence_budget(o).to_string());
  return j;
}

Json identification_to_json(const IdentificationResult& r, const Orbit& o, int order) {
  Json pts = Json::array();
  for (const auto& x : o.points) pts.push_back(point_json(x));
  return Json{{"orbit", pts},
              {"order", order},
              {"multiplier", {{"delta", r.multiplier.delta}, {"e4", r.multiplier.e4}, {"e6", r.multiplier.e6}}},
              {"weight", r.weight},
              {"cusp", r.cusp},
              {"constant", r.constant.to_string()},
              {"pi_exp", r.grade.pi},
              {"lambda_exp", r.grade.lambda},
              {"target", r.target},
              {"rational_constant", r.rational_constant.to_string()}};
}

}  // namespace sdw
