#pragma once

#include <functional>
#include <string>
#include <vector>

#include "sdw/instanton.hpp"
#include "sdw/modular.hpp"
#include "sdw/theta.hpp"

namespace sdw::oracle {

// Direct lattice sum with explicit powers of (m+p); shares nothing with theta_eval.
Complex naive_theta(const Rational& p, const Rational& q, int n, int dq, Complex mu, int range = 40);

struct LawReport {
  double max_residual = 0;
  std::string worst;
  std::size_t checks = 0;
  void record(double r, const std::string& what);
};

// Quasi-periodicity, tau -> tau + 1, tau -> tau + 2 and tau -> -1/tau for theta[p,q] and
// its q-derivative, derivative orders 0..4, plus the special laws for theta_2,3,4.
LawReport theta_law_report(const std::vector<Characteristics>& chars, const std::vector<Complex>& mus);

// T and S laws of w_j^(n) and F^(n), n <= 4, for the two-parameter family.
LawReport frame_law_report(const std::vector<Characteristics>& chars, const std::vector<Complex>& mus);
// Same for the one-parameter family.
LawReport frame_law_report_one(const std::vector<Complex>& q0s, const std::vector<Complex>& mus, double C = 1.0);

// Central difference of f at mu with step h along the real axis.
Complex central_difference(const std::function<Complex(Complex)>& f, Complex mu, double h);

}  // namespace sdw::oracle
