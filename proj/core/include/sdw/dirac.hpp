#pragma once

#include <array>

#include <Eigen/Dense>

#include "sdw/instanton.hpp"
#include "sdw/jet.hpp"

namespace sdw {

using Mat4 = Eigen::Matrix4cd;

// gamma^0 .. gamma^3, with (gamma^a)^2 = -I.
const std::array<Mat4, 4>& gamma_matrices();

// w_j and F with their first two mu-derivatives at one mu (Lambda = 1).
struct DiracInput {
  std::array<TaylorJet<2>, 3> w;
  TaylorJet<2> F;
};
DiracInput dirac_input(const JetFrame& frame);
// Constant w_j and F (all derivatives zero).
DiracInput dirac_input_constant(Complex w1, Complex w2, Complex w3, Complex F = 1.0);

// Angular coordinates; coordinate order throughout is (mu, eta, phi, psi).
struct Angles {
  double eta = 1.0;
  double phi = 0.0;
  double psi = 0.0;
};

// sum_nu linear[nu] xi_nu + constant.
struct FirstOrderSymbol {
  std::array<Mat4, 4> linear;
  Mat4 constant;
  Mat4 at(const std::array<double, 4>& xi) const;
};

// sum p2[nu][lam] xi_nu xi_lam + sum p1[nu] xi_nu + p0, with p2 symmetric in (nu, lam).
struct SymbolQuadratic {
  std::array<std::array<Mat4, 4>, 4> p2;
  std::array<Mat4, 4> p1;
  Mat4 p0;
  Mat4 leading(const std::array<double, 4>& xi) const;
  Mat4 at(const std::array<double, 4>& xi) const;
};

FirstOrderSymbol sigma_D(const DiracInput& in, const Angles& x);
FirstOrderSymbol sigma_Dtilde(const DiracInput& in, const Angles& x);

// Full symbol of D^2 and of the conformally rescaled square, by symbol composition.
SymbolQuadratic sigma_D_sq(const DiracInput& in, const Angles& x);
SymbolQuadratic sigma_Dtilde_sq(const DiracInput& in, const Angles& x);
// The same symbol assembled from the closed-form expansion (1/F) D^2 + explicit
// first- and zero-order corrections, transcribed term by term.
SymbolQuadratic sigma_Dtilde_sq_display(const DiracInput& in, const Angles& x);

// Inverse of the Bianchi IX metric w1 w2 w3 dmu^2 + ... (without the factor F).
Eigen::Matrix4cd inverse_metric(const DiracInput& in, const Angles& x);

struct CrosscheckReport {
  double p2 = 0;  // max entrywise |difference| / max(1, max entry)
  double p1 = 0;
  double p0 = 0;
  double max() const { return std::max({p2, p1, p0}); }
};
CrosscheckReport dtilde_sq_crosscheck(const DiracInput& in, const Angles& x);

}  // namespace sdw
