#pragma once

#include <array>

#include "sdw/jet.hpp"
#include "sdw/puiseux.hpp"
#include "sdw/theta.hpp"

namespace sdw {

// Metric functions in series form: w[j][k] = w_{j+1}^{(k)}, F[k] = F^{(k)}, k <= 4.
// Grades: w carries pi^1, F carries pi^-3 Lambda^-1.
struct SeriesFrame {
  std::array<std::array<PuiseuxSeries, 5>, 3> w;
  std::array<PuiseuxSeries, 5> F;
};

// Metric functions as jets at one mu (Lambda = 1). Order 5 so that the
// coefficients themselves can be differentiated once.
struct JetFrame {
  std::array<TaylorJet<5>, 3> w;
  TaylorJet<5> F;
};

// (p,q) where d/dq theta[p,q] vanishes identically: (0,0), (0,1/2), (1/2,0) mod 1.
bool is_degenerate(const Characteristics& pt);

// Every series in the frame is known below `trunc` at least in relative terms;
// absolute truncations follow from the valuations. Throws DomainError at
// degenerate points.
SeriesFrame frame_two_param_series(const Characteristics& pt, const Rational& trunc);

JetFrame frame_two_param_jet(const Characteristics& pt, Complex mu, double tol = 1e-15);

// q0 may be complex (the tau -> tau + 1 law shifts it by -i); C > 0.
JetFrame frame_one_param_jet(Complex q0, Complex mu, double C = 1.0, double tol = 1e-15);

}  // namespace sdw
