#include "sdw/dirac.hpp"

#include <cmath>

#include "sdw/errors.hpp"

namespace sdw {

namespace {

using J1 = TaylorJet<1>;
using Cd = std::complex<double>;
constexpr Cd kI(0, 1);

Cd cd(const Complex& z) { return Cd(static_cast<double>(z.real()), static_cast<double>(z.imag())); }

J1 jsin(const J1& x) {
  J1 r(std::sin(x[0]));
  r[1] = std::cos(x[0]) * x[1];
  return r;
}

J1 jcos(const J1& x) {
  J1 r(std::cos(x[0]));
  r[1] = -std::sin(x[0]) * x[1];
  return r;
}

J1 j1(Complex v, Complex d) {
  J1 r(v);
  r[1] = d;
  return r;
}

// Scalar data with one direction of differentiation active.
struct Inputs {
  std::array<J1, 3> w, wp;
  J1 F, Fp, eta, psi;
};

enum class Dir { mu, eta, psi };

Inputs inputs(const DiracInput& in, const Angles& x, Dir d) {
  Inputs r;
  const bool m = d == Dir::mu;
  for (int j = 0; j < 3; ++j) {
    r.w[j] = j1(in.w[j][0], m ? in.w[j][1] : 0.0);
    r.wp[j] = j1(in.w[j][1], m ? in.w[j][2] : 0.0);
  }
  r.F = j1(in.F[0], m ? in.F[1] : 0.0);
  r.Fp = j1(in.F[1], m ? in.F[2] : 0.0);
  r.eta = j1(x.eta, d == Dir::eta ? 1.0 : 0.0);
  r.psi = j1(x.psi, d == Dir::psi ? 1.0 : 0.0);
  return r;
}

// A_nu = sum_a A[nu][a] gamma^a, B = b0 gamma^0 + b123 gamma^1 gamma^2 gamma^3.
struct Coeffs {
  std::array<std::array<J1, 4>, 4> A{};
  J1 b0, b123;
};

Coeffs coeffs(const Inputs& in, bool tilde) {
  const J1 W = in.w[0] * in.w[1] * in.w[2];
  const J1 sW = sqrt(W);
  const J1 r1 = sqrt(in.w[0] / (in.w[1] * in.w[2]));
  const J1 r2 = sqrt(in.w[1] / (in.w[0] * in.w[2]));
  const J1 r3 = sqrt(in.w[2] / (in.w[0] * in.w[1]));
  const J1 se = jsin(in.eta), ce = jcos(in.eta), sp = jsin(in.psi), cp = jcos(in.psi);
  const J1 csc = J1(1.0) / se, cot = ce / se;

  Coeffs c;
  c.A[0][0] = J1(1.0) / sW;
  c.A[1][1] = -(r1 * sp);
  c.A[1][2] = r2 * cp;
  c.A[2][1] = r1 * csc * cp;
  c.A[2][2] = r2 * csc * sp;
  c.A[3][1] = -(r1 * cot * cp);
  c.A[3][2] = -(r2 * cot * sp);
  c.A[3][3] = r3;

  J1 logd(0.0), inv2(0.0);
  for (int j = 0; j < 3; ++j) {
    logd += in.wp[j] / in.w[j];
    inv2 += J1(1.0) / (in.w[j] * in.w[j]);
  }
  c.b0 = logd / (Complex(4) * sW);
  c.b123 = -(sW * inv2) * Complex(0.25);

  if (tilde) {
    const J1 sF = sqrt(in.F);
    const J1 a = J1(1.0) / sF;
    for (auto& row : c.A)
      for (auto& e : row) e = a * e;
    const J1 conf = Complex(3) * in.Fp / (Complex(4) * in.F * sF * sW);
    c.b0 = a * c.b0 + conf;
    c.b123 = a * c.b123;
  }
  return c;
}

const Mat4& g123() {
  static const Mat4 m = gamma_matrices()[1] * gamma_matrices()[2] * gamma_matrices()[3];
  return m;
}

// Coefficient matrices of a first-order operator sum A_nu d_nu + B and their
// coordinate derivatives (phi never appears explicitly).
struct Operator {
  std::array<Mat4, 4> A;
  Mat4 B;
  std::array<std::array<Mat4, 4>, 4> dA;  // dA[nu][lam] = d_nu A_lam
  std::array<Mat4, 4> dB;
};

Mat4 assemble(const std::array<J1, 4>& a, int comp) {
  const auto& g = gamma_matrices();
  Mat4 m = Mat4::Zero();
  for (int k = 0; k < 4; ++k) m += cd(a[k][static_cast<size_t>(comp)]) * g[k];
  return m;
}

Mat4 assemble_b(const Coeffs& c, int comp) {
  return cd(c.b0[static_cast<size_t>(comp)]) * gamma_matrices()[0] + cd(c.b123[static_cast<size_t>(comp)]) * g123();
}

void check_point(const DiracInput& in, const Angles& x, bool tilde) {
  if (std::abs(std::sin(x.eta)) < 1e-12) throw DomainError("coordinate singularity at eta = 0 or pi");
  // Principal branch of sqrt(F); only the cut along the nonpositive reals is refused.
  const Complex F = in.F[0];
  if (tilde && F.real() <= 0 && std::abs(F.imag()) <= 1e-12 * std::abs(F))
    throw DomainError("F lies on the branch cut of the principal square root");
}

Operator build(const DiracInput& in, const Angles& x, bool tilde) {
  check_point(in, x, tilde);
  const Coeffs cm = coeffs(inputs(in, x, Dir::mu), tilde);
  const Coeffs ce = coeffs(inputs(in, x, Dir::eta), tilde);
  const Coeffs cs = coeffs(inputs(in, x, Dir::psi), tilde);
  Operator op;
  op.B = assemble_b(cm, 0);
  for (int l = 0; l < 4; ++l) {
    op.A[l] = assemble(cm.A[l], 0);
    op.dA[0][l] = assemble(cm.A[l], 1);
    op.dA[1][l] = assemble(ce.A[l], 1);
    op.dA[2][l] = Mat4::Zero();
    op.dA[3][l] = assemble(cs.A[l], 1);
  }
  op.dB = {assemble_b(cm, 1), assemble_b(ce, 1), Mat4::Zero(), assemble_b(cs, 1)};
  return op;
}

FirstOrderSymbol symbol(const Operator& op) {
  FirstOrderSymbol s;
  for (int l = 0; l < 4; ++l) s.linear[l] = kI * op.A[l];
  s.constant = op.B;
  return s;
}

// sigma(PP) = sigma sigma + (-i) sum_nu d_xi_nu sigma d_x_nu sigma.
SymbolQuadratic square(const Operator& op) {
  SymbolQuadratic q;
  for (int n = 0; n < 4; ++n)
    for (int l = 0; l < 4; ++l) q.p2[n][l] = -0.5 * (op.A[n] * op.A[l] + op.A[l] * op.A[n]);
  for (int l = 0; l < 4; ++l) {
    Mat4 m = op.A[l] * op.B + op.B * op.A[l];
    for (int n = 0; n < 4; ++n) m += op.A[n] * op.dA[n][l];
    q.p1[l] = kI * m;
  }
  q.p0 = op.B * op.B;
  for (int n = 0; n < 4; ++n) q.p0 += op.A[n] * op.dB[n];
  return q;
}

double part_residual(const Mat4& a, const Mat4& b) {
  const double scale = std::max({1.0, a.cwiseAbs().maxCoeff(), b.cwiseAbs().maxCoeff()});
  return (a - b).cwiseAbs().maxCoeff() / scale;
}

}  // namespace

const std::array<Mat4, 4>& gamma_matrices() {
  static const std::array<Mat4, 4> g = [] {
    const Cd i = kI;
    std::array<Mat4, 4> m;
    m[0] << 0, 0, i, 0,  //
        0, 0, 0, i,      //
        i, 0, 0, 0,      //
        0, i, 0, 0;
    m[1] << 0, 0, 0, 1,  //
        0, 0, 1, 0,      //
        0, -1, 0, 0,     //
        -1, 0, 0, 0;
    m[2] << 0, 0, 0, -i,  //
        0, 0, i, 0,       //
        0, i, 0, 0,       //
        -i, 0, 0, 0;
    m[3] << 0, 0, 1, 0,  //
        0, 0, 0, -1,     //
        -1, 0, 0, 0,     //
        0, 1, 0, 0;
    return m;
  }();
  return g;
}

DiracInput dirac_input(const JetFrame& frame) {
  DiracInput in;
  for (int j = 0; j < 3; ++j) in.w[j] = truncate<2>(frame.w[j]);
  in.F = truncate<2>(frame.F);
  return in;
}

DiracInput dirac_input_constant(Complex w1, Complex w2, Complex w3, Complex F) {
  return DiracInput{{TaylorJet<2>(w1), TaylorJet<2>(w2), TaylorJet<2>(w3)}, TaylorJet<2>(F)};
}

Mat4 FirstOrderSymbol::at(const std::array<double, 4>& xi) const {
  Mat4 m = constant;
  for (int l = 0; l < 4; ++l) m += xi[l] * linear[l];
  return m;
}

Mat4 SymbolQuadratic::leading(const std::array<double, 4>& xi) const {
  Mat4 m = Mat4::Zero();
  for (int n = 0; n < 4; ++n)
    for (int l = 0; l < 4; ++l) m += xi[n] * xi[l] * p2[n][l];
  return m;
}

Mat4 SymbolQuadratic::at(const std::array<double, 4>& xi) const {
  Mat4 m = leading(xi) + p0;
  for (int l = 0; l < 4; ++l) m += xi[l] * p1[l];
  return m;
}

FirstOrderSymbol sigma_D(const DiracInput& in, const Angles& x) { return symbol(build(in, x, false)); }
FirstOrderSymbol sigma_Dtilde(const DiracInput& in, const Angles& x) { return symbol(build(in, x, true)); }

SymbolQuadratic sigma_D_sq(const DiracInput& in, const Angles& x) { return square(build(in, x, false)); }
SymbolQuadratic sigma_Dtilde_sq(const DiracInput& in, const Angles& x) { return square(build(in, x, true)); }

SymbolQuadratic sigma_Dtilde_sq_display(const DiracInput& in, const Angles& x) {
  check_point(in, x, true);
  SymbolQuadratic q = sigma_D_sq(in, x);
  const Cd F = cd(in.F[0]), Fp = cd(in.F[1]);
  const Cd w1 = cd(in.w[0][0]), w2 = cd(in.w[1][0]), w3 = cd(in.w[2][0]);
  const Cd W = w1 * w2 * w3;
  for (auto& row : q.p2)
    for (auto& m : row) m /= F;
  for (auto& m : q.p1) m /= F;
  q.p0 /= F;

  const auto& g = gamma_matrices();
  const Mat4 I = Mat4::Identity();
  const Mat4 g01 = g[0] * g[1], g02 = g[0] * g[2], g03 = g[0] * g[3];
  const double se = std::sin(x.eta), ce = std::cos(x.eta), sp = std::sin(x.psi), cp = std::cos(x.psi);
  const Cd k = Fp / (2.0 * F * F * W);

  // Each d_nu becomes i xi_nu.
  q.p1[0] += kI * (-Fp / (F * F * W)) * I;
  q.p1[1] += kI * k * (w1 * sp * g01 - w2 * cp * g02);
  q.p1[2] += kI * (-k / se) * (w1 * cp * g01 - w2 * sp * g02);
  q.p1[3] += kI * k * ((ce / se) * (w1 * cp * g01 + w2 * sp * g02) - w3 * g03);

  Cd scalar = 9.0 * Fp * Fp / (16.0 * F * F * F * W);
  for (int j = 0; j < 3; ++j) scalar += Fp * cd(in.w[j][1]) / (8.0 * F * F * W * cd(in.w[j][0]));
  const Cd inv2 = 1.0 / (w1 * w1) + 1.0 / (w2 * w2) + 1.0 / (w3 * w3);
  q.p0 += scalar * I + (inv2 * Fp / (8.0 * F * F * W * W)) * (g[0] * g123());
  return q;
}

Eigen::Matrix4cd inverse_metric(const DiracInput& in, const Angles& x) {
  const Cd w1 = cd(in.w[0][0]), w2 = cd(in.w[1][0]), w3 = cd(in.w[2][0]);
  const double se = std::sin(x.eta), ce = std::cos(x.eta), sp = std::sin(x.psi), cp = std::cos(x.psi);
  Eigen::Matrix4cd g = Eigen::Matrix4cd::Zero();
  g(0, 0) = w1 * w2 * w3;
  g(1, 1) = w2 * w3 * sp * sp / w1 + w1 * w3 * cp * cp / w2;
  g(1, 2) = g(2, 1) = (w1 * w1 - w2 * w2) * w3 * se * sp * cp / (w1 * w2);
  g(2, 2) = w2 * w3 * se * se * cp * cp / w1 + w1 * (w3 * se * se * sp * sp / w2 + w2 * ce * ce / w3);
  g(2, 3) = g(3, 2) = w1 * w2 * ce / w3;
  g(3, 3) = w1 * w2 / w3;
  return g.inverse();
}

CrosscheckReport dtilde_sq_crosscheck(const DiracInput& in, const Angles& x) {
  const SymbolQuadratic a = sigma_Dtilde_sq(in, x);
  const SymbolQuadratic b = sigma_Dtilde_sq_display(in, x);
  CrosscheckReport r;
  for (int n = 0; n < 4; ++n) {
    for (int l = 0; l < 4; ++l) r.p2 = std::max(r.p2, part_residual(a.p2[n][l], b.p2[n][l]));
    r.p1 = std::max(r.p1, part_residual(a.p1[n], b.p1[n]));
  }
  r.p0 = part_residual(a.p0, b.p0);
  return r;
}

}  // namespace sdw
