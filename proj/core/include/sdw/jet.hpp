#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>

#include "sdw/errors.hpp"

namespace sdw {

// Numeric evaluation runs in extended precision; the high-order coefficients
// cancel by several orders of magnitude.
using Real = long double;
using Complex = std::complex<Real>;

// std::complex has no mixed-precision operators.
inline Complex operator*(double a, const Complex& b) { return Real(a) * b; }
inline Complex operator*(const Complex& a, double b) { return a * Real(b); }
inline Complex operator/(const Complex& a, double b) { return a / Real(b); }
inline Complex operator/(double a, const Complex& b) { return Real(a) / b; }
inline Complex operator+(double a, const Complex& b) { return Real(a) + b; }
inline Complex operator+(const Complex& a, double b) { return a + Real(b); }
inline Complex operator-(double a, const Complex& b) { return Real(a) - b; }
inline Complex operator-(const Complex& a, double b) { return a - Real(b); }

// Derivatives f, f', ..., f^(K) of a holomorphic function of mu at one point.
template <int K>
class TaylorJet {
  static_assert(K >= 0 && K <= 6, "jets are limited to order 6");

public:
  static constexpr int order = K;

  TaylorJet() { d_.fill(Complex(0)); }
  TaylorJet(Complex value) { d_.fill(Complex(0)); d_[0] = value; }  // NOLINT(google-explicit-constructor)
  TaylorJet(double value) : TaylorJet(Complex(value)) {}  // NOLINT(google-explicit-constructor)

  // The identity function mu evaluated at x.
  static TaylorJet variable(Complex x) {
    TaylorJet j(x);
    if constexpr (K >= 1) j.d_[1] = 1.0;
    return j;
  }

  Complex& operator[](std::size_t i) { return d_[i]; }
  const Complex& operator[](std::size_t i) const { return d_[i]; }
  Complex value() const { return d_[0]; }
  const std::array<Complex, K + 1>& data() const { return d_; }

  Real scale() const {
    Real s = 0;
    for (const auto& c : d_) s = std::max(s, std::abs(c));
    return s;
  }

  TaylorJet& operator+=(const TaylorJet& o) { for (int i = 0; i <= K; ++i) d_[i] += o.d_[i]; return *this; }
  TaylorJet& operator-=(const TaylorJet& o) { for (int i = 0; i <= K; ++i) d_[i] -= o.d_[i]; return *this; }
  TaylorJet& operator*=(Complex s) { for (auto& c : d_) c *= s; return *this; }
  TaylorJet& operator*=(double s) { return *this *= Complex(s); }
  TaylorJet operator-() const { TaylorJet r(*this); r *= -1.0; return r; }

  friend TaylorJet operator+(TaylorJet a, const TaylorJet& b) { return a += b; }
  friend TaylorJet operator-(TaylorJet a, const TaylorJet& b) { return a -= b; }
  friend TaylorJet operator*(TaylorJet a, Complex s) { return a *= s; }
  friend TaylorJet operator*(Complex s, TaylorJet a) { return a *= s; }
  friend TaylorJet operator*(TaylorJet a, double s) { return a *= s; }
  friend TaylorJet operator*(double s, TaylorJet a) { return a *= s; }

  friend TaylorJet operator*(const TaylorJet& a, const TaylorJet& b) {
    TaylorJet r;
    for (int n = 0; n <= K; ++n) {
      Complex s = 0;
      for (int k = 0; k <= n; ++k) s += binom(n, k) * a.d_[k] * b.d_[n - k];
      r.d_[n] = s;
    }
    return r;
  }

  friend TaylorJet operator/(const TaylorJet& a, const TaylorJet& b) {
    Real sc = std::max(b.scale(), Real(1e-300));
    if (std::abs(b.d_[0]) < 1e-12 * sc) throw DomainError("jet division by a vanishing value");
    TaylorJet r;
    for (int n = 0; n <= K; ++n) {
      Complex s = a.d_[n];
      for (int k = 1; k <= n; ++k) s -= binom(n, k) * b.d_[k] * r.d_[n - k];
      r.d_[n] = s / b.d_[0];
    }
    return r;
  }

  TaylorJet& operator*=(const TaylorJet& o) { return *this = *this * o; }
  TaylorJet& operator/=(const TaylorJet& o) { return *this = *this / o; }

  static Real binom(int n, int k) {
    Real r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
  }

private:
  std::array<Complex, K + 1> d_;
};

using Jet = TaylorJet<4>;

// f' as a jet one order lower.
template <int K>
TaylorJet<K - 1> derivative(const TaylorJet<K>& f) {
  TaylorJet<K - 1> r;
  for (int i = 0; i < K; ++i) r[static_cast<std::size_t>(i)] = f[static_cast<std::size_t>(i + 1)];
  return r;
}

template <int J, int K>
TaylorJet<J> truncate(const TaylorJet<K>& f) {
  static_assert(J <= K);
  TaylorJet<J> r;
  for (int i = 0; i <= J; ++i) r[static_cast<std::size_t>(i)] = f[static_cast<std::size_t>(i)];
  return r;
}

// f'/f through order K-1; the order-K component is not determined by f.
template <int K>
TaylorJet<K - 1> log_derivative(const TaylorJet<K>& f) {
  return derivative(f) / truncate<K - 1>(f);
}

// Principal square root, via the Taylor-coefficient recurrence of s^2 = f.
template <int K>
TaylorJet<K> sqrt(const TaylorJet<K>& f) {
  std::array<Complex, K + 1> a{}, s{};
  Real fact = 1;
  for (int i = 0; i <= K; ++i) {
    if (i > 0) fact *= i;
    a[i] = f[static_cast<std::size_t>(i)] / fact;
  }
  if (std::abs(a[0]) == 0.0) throw DomainError("square root of a vanishing jet");
  s[0] = std::sqrt(a[0]);
  for (int k = 1; k <= K; ++k) {
    Complex acc = a[k];
    for (int i = 1; i < k; ++i) acc -= s[i] * s[k - i];
    s[k] = acc / (2.0 * s[0]);
  }
  TaylorJet<K> r;
  fact = 1;
  for (int i = 0; i <= K; ++i) {
    if (i > 0) fact *= i;
    r[static_cast<std::size_t>(i)] = s[i] * fact;
  }
  return r;
}

template <int K>
TaylorJet<K> pow(const TaylorJet<K>& f, int e) {
  if (e < 0) return TaylorJet<K>(1.0) / pow(f, -e);
  TaylorJet<K> r(1.0);
  for (int i = 0; i < e; ++i) r = r * f;
  return r;
}

}  // namespace sdw
