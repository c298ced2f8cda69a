#include "support.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <sstream>

namespace sdw::oracle {

namespace {

constexpr Real kPi = std::numbers::pi_v<Real>;
const Complex kI{0, 1};

std::string describe(const std::string& law, const Characteristics& c, int n, Complex mu) {
  std::ostringstream os;
  os << law << " [" << c.p << "," << c.q << "] n=" << n << " mu=" << static_cast<double>(mu.real()) << "+"
     << static_cast<double>(mu.imag()) << "i";
  return os.str();
}

std::string describe(const std::string& law, Complex q0, int n, Complex mu) {
  std::ostringstream os;
  os << law << " q0=" << static_cast<double>(q0.real()) << "+" << static_cast<double>(q0.imag()) << "i n=" << n
     << " mu=" << static_cast<double>(mu.real()) << "+" << static_cast<double>(mu.imag()) << "i";
  return os.str();
}

Complex phase(const Rational& turns) { return std::polar(Real(1), 2 * kPi * turns.to_long_double()); }

// f^(n)(1/mu) = sign^n sum_i kRows[n][i] mu^(2n+2-i) g^(n-i)(mu) when f(nu) = nu^-2 g(1/nu).
constexpr std::array<std::array<int, 5>, 5> kRows{{
    {1, 0, 0, 0, 0},
    {1, 2, 0, 0, 0},
    {1, 6, 6, 0, 0},
    {1, 12, 36, 24, 0},
    {1, 20, 120, 240, 120},
}};

template <int K>
Complex s_row(int n, const TaylorJet<K>& g, Complex mu, int sign) {
  Complex s = 0;
  for (int i = 0; i <= n; ++i)
    s += Real(kRows[n][i]) * std::pow(mu, Real(2 * n + 2 - i)) * g[static_cast<std::size_t>(n - i)];
  return (n % 2 == 1 ? Real(sign) : Real(1)) * s;
}

// F(1/mu) rows for the two-parameter family, derivative orders 0..4.
Complex f_s_row(int n, const TaylorJet<5>& g, Complex mu) {
  switch (n) {
    case 0: return -g[0] / (mu * mu);
    case 1: return g[1] - Real(2) * g[0] / mu;
    case 2: return -mu * mu * g[2] + Real(2) * mu * g[1] - Real(2) * g[0];
    case 3: return std::pow(mu, Real(4)) * g[3];
    default: return -std::pow(mu, Real(6)) * g[4] - Real(4) * std::pow(mu, Real(5)) * g[3];
  }
}

}  // namespace

void LawReport::record(double r, const std::string& what) {
  ++checks;
  if (!(r <= max_residual)) {
    max_residual = r;
    worst = what;
  }
}

Complex naive_theta(const Rational& p, const Rational& q, int n, int dq, Complex mu, int range) {
  const Real pr = p.to_long_double();
  const Real qr = q.to_long_double();
  Complex sum = 0;
  for (int m = -range; m <= range; ++m) {
    Real x = Real(m) + pr;
    Complex term = std::exp(-kPi * x * x * mu + Real(2) * kPi * kI * x * qr);
    term *= std::pow(-kPi * x * x, Real(n));
    if (dq == 1) term *= Real(2) * kPi * kI * x;
    sum += term;
  }
  return sum;
}

LawReport theta_law_report(const std::vector<Characteristics>& chars, const std::vector<Complex>& mus) {
  LawReport rep;
  const Rational half(1, 2);
  for (const auto& c : chars) {
    const Rational& p = c.p;
    const Rational& q = c.q;
    for (int dq = 0; dq <= 1; ++dq) {
      for (int n = 0; n <= 4; ++n) {
        ThetaSpec spec{c, n, dq};
        for (Complex mu : mus) {
          Complex base = theta_eval(spec, mu);
          rep.record(relative_residual(theta_eval({{p, q + 1}, n, dq}, mu), phase(p) * base),
                     describe("q+1", c, n, mu));
          rep.record(relative_residual(theta_eval({{p + 1, q}, n, dq}, mu), base), describe("p+1", c, n, mu));
          rep.record(relative_residual(theta_eval(spec, mu - kI), theta_t_law_rhs(spec, mu)),
                     describe("T", c, n, mu));
          Complex t2 = phase(-p * p) * theta_eval({{p, q + 2 * p}, n, dq}, mu);
          rep.record(relative_residual(theta_eval(spec, mu - Real(2) * kI), t2), describe("T2", c, n, mu));
          rep.record(relative_residual(theta_eval(spec, Real(1) / mu), theta_s_law_rhs(spec, mu)),
                     describe("S", c, n, mu));
        }
      }
    }
  }

  // theta_2 -> e^(i pi/4) theta_2, theta_3 <-> theta_4 under T; theta_2 <-> theta_4, theta_3 fixed under S.
  const std::array<Characteristics, 3> th{kTheta2, kTheta3, kTheta4};
  const std::array<int, 3> t_image{0, 2, 1};
  const std::array<int, 3> s_image{2, 1, 0};
  for (int a = 0; a < 3; ++a) {
    for (int n = 0; n <= 4; ++n) {
      for (Complex mu : mus) {
        Complex lhs_t = theta_eval({th[a], n, 0}, mu - kI);
        Complex rhs_t = theta_eval({th[t_image[a]], n, 0}, mu);
        if (a == 0) rhs_t *= std::polar(Real(1), kPi / 4);
        rep.record(relative_residual(lhs_t, rhs_t), describe("T234", th[a], n, mu));
        Complex rhs_s = 0;
        for (int j = 0; j <= n; ++j)
          rhs_s += c_const(j, 2 * n).to_complex() * std::pow(mu, Real(2 * n - j) + half.to_long_double()) *
                   theta_eval({th[s_image[a]], n - j, 0}, mu);
        rep.record(relative_residual(theta_eval({th[a], n, 0}, Real(1) / mu), rhs_s), describe("S234", th[a], n, mu));
      }
    }
  }
  return rep;
}

LawReport frame_law_report(const std::vector<Characteristics>& chars, const std::vector<Complex>& mus) {
  LawReport rep;
  const Rational half(1, 2);
  // w1 -> +w3, w2 -> +w2, w3 -> -w1 under S.
  const std::array<int, 3> s_target{2, 1, 0};
  const std::array<int, 3> s_sign{1, 1, -1};
  const std::array<int, 3> t_target{0, 2, 1};
  for (const auto& c : chars) {
    Characteristics shifted{c.p, c.q + c.p + half};
    Characteristics dual{-c.q, c.p};
    for (Complex mu : mus) {
      JetFrame at_t = frame_two_param_jet(c, mu - kI);
      JetFrame t_rhs = frame_two_param_jet(shifted, mu);
      JetFrame at_s = frame_two_param_jet(c, Real(1) / mu);
      JetFrame s_rhs = frame_two_param_jet(dual, mu);
      for (int n = 0; n <= 4; ++n) {
        auto k = static_cast<std::size_t>(n);
        for (int j = 0; j < 3; ++j) {
          std::string name = "w" + std::to_string(j + 1);
          rep.record(relative_residual(at_t.w[j][k], t_rhs.w[t_target[j]][k]), describe(name + " T", c, n, mu));
          Complex rhs = Real(s_sign[j]) * s_row(n, s_rhs.w[s_target[j]], mu, -1);
          rep.record(relative_residual(at_s.w[j][k], rhs), describe(name + " S", c, n, mu));
        }
        rep.record(relative_residual(at_t.F[k], t_rhs.F[k]), describe("F T", c, n, mu));
        rep.record(relative_residual(at_s.F[k], f_s_row(n, s_rhs.F, mu)), describe("F S", c, n, mu));
      }
    }
  }
  return rep;
}

LawReport frame_law_report_one(const std::vector<Complex>& q0s, const std::vector<Complex>& mus, double C) {
  LawReport rep;
  // All three w_j pick up a minus sign under S; w1 <-> w3.
  const std::array<int, 3> s_target{2, 1, 0};
  const std::array<int, 3> t_target{0, 2, 1};
  for (Complex q0 : q0s) {
    for (Complex mu : mus) {
      JetFrame at_t = frame_one_param_jet(q0, mu - kI, C);
      JetFrame t_rhs = frame_one_param_jet(q0 - kI, mu, C);
      JetFrame at_s = frame_one_param_jet(q0, Real(1) / mu, C);
      JetFrame s_rhs = frame_one_param_jet(Real(1) / q0, mu, C);
      for (int n = 0; n <= 4; ++n) {
        auto k = static_cast<std::size_t>(n);
        for (int j = 0; j < 3; ++j) {
          std::string name = "w" + std::to_string(j + 1);
          rep.record(relative_residual(at_t.w[j][k], t_rhs.w[t_target[j]][k]), describe(name + " T", q0, n, mu));
          Complex rhs = -s_row(n, s_rhs.w[s_target[j]], mu, -1);
          rep.record(relative_residual(at_s.w[j][k], rhs), describe(name + " S", q0, n, mu));
        }
        if (n <= 2) rep.record(relative_residual(at_t.F[k], t_rhs.F[k]), describe("F T", q0, n, mu));
        else rep.record(relative_residual(at_t.F[k], 0), describe("F''' = 0", q0, n, mu));
      }
      rep.record(relative_residual(at_s.F[0], q0 * q0 / (mu * mu) * s_rhs.F[0]), describe("F S", q0, 0, mu));
      rep.record(relative_residual(at_s.F[1], q0 / mu * s_rhs.F[1]), describe("F S", q0, 1, mu));
    }
  }
  return rep;
}

Complex central_difference(const std::function<Complex(Complex)>& f, Complex mu, double h) {
  return (f(mu + Real(h)) - f(mu - Real(h))) / Real(2 * h);
}

}  // namespace sdw::oracle
