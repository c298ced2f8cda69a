#pragma once

#include <nlohmann/json.hpp>

#include "sdw/modular.hpp"
#include "sdw/puiseux.hpp"
#include "sdw/seeley.hpp"

namespace sdw {

using Json = nlohmann::json;

// {"exp_den": D, "cyclotomic_order": N, "grade": {"pi": a, "lambda": b},
//  "terms": [{"k": k, "exponent": "k/D", "coeffs": ["num/den", ...]}], "trunc": T | null}
// coeffs are in the power basis of Q(zeta_N).
Json series_to_json(const PuiseuxSeries& s);
PuiseuxSeries series_from_json(const Json& j);

Json coeff_result_to_json(const CoeffResult& r);
Json orbit_to_json(const Orbit& o);  // budget is null for the exceptional orbits
Json identification_to_json(const IdentificationResult& r, const Orbit& o, int order);

Json complex_to_json(Complex z);

}  // namespace sdw
