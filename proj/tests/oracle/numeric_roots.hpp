#pragma once

// Test-only numeric oracle: complex roots by Aberth-Ehrlich iteration in
// 100-digit arithmetic. Shares no code with the library's root finder.

#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>

namespace oracle {

using Real = boost::multiprecision::cpp_bin_float_100;
using Cx = boost::multiprecision::cpp_complex_100;

// Monic polynomial, coefficients lowest degree first.
inline std::vector<Cx> roots(const std::vector<long long>& coeffs) {
  const std::size_t n = coeffs.size() - 1;
  std::vector<Cx> z(n);
  if (n == 0) return z;
  Real radius = 1;
  for (auto c : coeffs) radius = std::max(radius, Real(1) + boost::multiprecision::abs(Real(c)));
  const Real pi = boost::math::constants::pi<Real>();
  for (std::size_t k = 0; k < n; ++k) {
    const Real angle = 2 * pi * k / n + Real(0.4);
    z[k] = Cx(radius * cos(angle), radius * sin(angle));
  }
  auto eval = [&](const Cx& x, Cx& f, Cx& df) {
    f = Cx(0);
    df = Cx(0);
    for (std::size_t k = coeffs.size(); k-- > 0;) {
      df = df * x + f;
      f = f * x + Cx(Real(coeffs[k]));
    }
  };
  const Real tiny("1e-80");
  for (int iter = 0; iter < 4000; ++iter) {
    Real worst = 0;
    for (std::size_t i = 0; i < n; ++i) {
      Cx f, df;
      eval(z[i], f, df);
      if (abs(f) == 0) continue;
      const Cx ratio = f / df;
      Cx repulsion(0);
      for (std::size_t j = 0; j < n; ++j)
        if (j != i) repulsion += Cx(1) / (z[i] - z[j]);
      const Cx step = ratio / (Cx(1) - ratio * repulsion);
      z[i] -= step;
      worst = std::max(worst, Real(abs(step)));
    }
    if (worst < tiny) break;
  }
  return z;
}

// Coefficients (lowest first) of prod (T - z_k^s), real parts.
inline std::vector<Real> powered_coefficients(const std::vector<long long>& coeffs, unsigned s) {
  std::vector<Cx> c{Cx(1)};
  for (const auto& z : roots(coeffs)) {
    Cx zs(1);
    for (unsigned i = 0; i < s; ++i) zs *= z;
    std::vector<Cx> next(c.size() + 1, Cx(0));
    for (std::size_t i = 0; i < c.size(); ++i) {
      next[i + 1] += c[i];
      next[i] -= zs * c[i];
    }
    c = std::move(next);
  }
  std::vector<Real> out;
  for (const auto& x : c) out.push_back(x.real());
  return out;
}

// Power sums p_1..p_m, real parts.
inline std::vector<Real> power_sums(const std::vector<long long>& coeffs, std::size_t m) {
  const auto z = roots(coeffs);
  std::vector<Real> out;
  for (std::size_t j = 1; j <= m; ++j) {
    Cx acc(0);
    for (const auto& r : z) {
      Cx p(1);
      for (std::size_t i = 0; i < j; ++i) p *= r;
      acc += p;
    }
    out.push_back(acc.real());
  }
  return out;
}

}  // namespace oracle
