#include "semistable/weil.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include <Eigen/Eigenvalues>

#include "semistable/error.hpp"
#include "semistable/primes.hpp"

namespace semistable {
namespace {

// Dense polynomial over Q, lowest degree first, no trailing zeros (the zero
// polynomial is empty).
using QPoly = std::vector<mpq_class>;

void trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

QPoly to_qpoly(const IntPolynomial& f) {
  QPoly p;
  p.reserve(f.coefficients().size());
  for (const auto& c : f.coefficients()) p.emplace_back(c);
  return p;
}

QPoly derivative(const QPoly& p) {
  QPoly d;
  for (std::size_t k = 1; k < p.size(); ++k) d.push_back(p[k] * static_cast<unsigned long>(k));
  trim(d);
  return d;
}

void make_monic(QPoly& p) {
  if (p.empty()) return;
  const mpq_class lead = p.back();
  for (auto& c : p) c /= lead;
}

// Returns quotient, leaves remainder in a.
QPoly divmod(QPoly& a, const QPoly& b) {
  if (a.size() < b.size()) return {};
  const std::size_t db = b.size() - 1;
  QPoly quot(a.size() - db);
  for (std::size_t k = a.size(); k-- > db;) {
    const mpq_class coef = a[k] / b.back();
    quot[k - db] = coef;
    for (std::size_t j = 0; j <= db; ++j) a[k - db + j] -= coef * b[j];
  }
  a.resize(db);
  trim(a);
  trim(quot);
  return quot;
}

QPoly exact_div(QPoly a, const QPoly& b) {
  QPoly q = divmod(a, b);
  return q;
}

QPoly gcd(QPoly a, QPoly b) {
  while (!b.empty()) {
    divmod(a, b);
    std::swap(a, b);
  }
  make_monic(a);
  return a;
}

QPoly minus(const QPoly& a, const QPoly& b) {
  QPoly r(std::max(a.size(), b.size()));
  for (std::size_t k = 0; k < a.size(); ++k) r[k] += a[k];
  for (std::size_t k = 0; k < b.size(); ++k) r[k] -= b[k];
  trim(r);
  return r;
}

// Yun's algorithm: factors[i] is the product of the roots of multiplicity i+1.
std::vector<QPoly> squarefree_factors(const QPoly& f) {
  std::vector<QPoly> out;
  const QPoly df = derivative(f);
  QPoly a = gcd(f, df);
  QPoly b = exact_div(f, a);
  QPoly c = exact_div(df, a);
  QPoly d = minus(c, derivative(b));
  while (b.size() > 1) {
    QPoly g = gcd(b, d);
    out.push_back(g);
    b = exact_div(b, g);
    c = exact_div(d, g);
    d = minus(c, derivative(b));
  }
  return out;
}

using Complex = std::complex<long double>;

Complex horner(const std::vector<long double>& p, Complex z) {
  Complex acc = 0;
  for (std::size_t k = p.size(); k-- > 0;) acc = acc * z + p[k];
  return acc;
}

// Roots of a monic square-free factor: companion-matrix eigenvalues in
// double, then Newton in long double against the exact coefficients.
std::vector<Complex> simple_roots(const QPoly& monic) {
  const std::size_t n = monic.size() - 1;
  std::vector<long double> coeff(monic.size());
  for (std::size_t k = 0; k < monic.size(); ++k) coeff[k] = static_cast<long double>(monic[k].get_d());
  if (n == 1) return {Complex(-coeff[0], 0)};

  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(n, n);
  for (std::size_t i = 1; i < n; ++i) companion(i, i - 1) = 1.0;
  for (std::size_t i = 0; i < n; ++i) companion(i, n - 1) = -static_cast<double>(coeff[i]);
  Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, false);
  if (solver.info() != Eigen::Success)
    throw RootFindingFailure("eigenvalue solver did not converge on degree " + std::to_string(n));

  std::vector<long double> dcoeff(n);
  for (std::size_t k = 1; k <= n; ++k) dcoeff[k - 1] = coeff[k] * static_cast<long double>(k);

  std::vector<Complex> roots;
  roots.reserve(n);
  for (Eigen::Index i = 0; i < static_cast<Eigen::Index>(n); ++i) {
    const auto ev = solver.eigenvalues()[i];
    Complex z(ev.real(), ev.imag());
    for (int iter = 0; iter < 50; ++iter) {
      const Complex fz = horner(coeff, z);
      const Complex dz = horner(dcoeff, z);
      if (std::abs(dz) == 0) break;
      const Complex step = fz / dz;
      z -= step;
      if (std::abs(step) <= 1e-17L * std::max<long double>(1, std::abs(z))) break;
    }
    long double scale = 0;
    for (std::size_t k = 0; k < coeff.size(); ++k)
      scale += std::abs(coeff[k]) * std::pow(std::abs(z), static_cast<long double>(k));
    if (!std::isfinite(scale) || std::abs(horner(coeff, z)) > 1e-9L * std::max<long double>(1, scale))
      throw RootFindingFailure("Newton polishing did not converge near " +
                               std::to_string(static_cast<double>(z.real())) + "+" +
                               std::to_string(static_cast<double>(z.imag())) + "i");
    roots.push_back(z);
  }
  return roots;
}

}  // namespace

std::vector<Complex> numeric_roots(const IntPolynomial& poly) {
  if (poly.degree() > kMaxRootFindingDegree)
    throw RootFindingFailure("degree " + std::to_string(poly.degree()) + " exceeds cap " +
                             std::to_string(kMaxRootFindingDegree));
  std::vector<Complex> roots;
  if (poly.degree() == 0) return roots;
  const auto factors = squarefree_factors(to_qpoly(poly));
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (factors[i].size() <= 1) continue;
    for (const auto& z : simple_roots(factors[i]))
      roots.insert(roots.end(), i + 1, z);
  }
  if (roots.size() != poly.degree())
    throw RootFindingFailure("square-free decomposition lost roots");
  return roots;
}

bool validate_weights(const IntPolynomial& poly, std::uint64_t q, std::span<const unsigned> weights,
                      double tolerance) {
  if (weights.size() != poly.degree())
    throw DomainError("validate_weights: " + std::to_string(weights.size()) +
                      " weights for a degree " + std::to_string(poly.degree()) + " polynomial");
  if (!(tolerance > 0 && tolerance < 0.5))
    throw DomainError("validate_weights: tolerance must lie in (0, 0.5)");
  if (q < 2) throw DomainError("validate_weights: q must be at least 2");

  std::vector<long double> sizes;
  for (const auto& z : numeric_roots(poly)) sizes.push_back(std::abs(z));
  std::vector<long double> targets;
  const long double root_q = std::sqrt(static_cast<long double>(q));
  for (unsigned w : weights) targets.push_back(std::pow(root_q, static_cast<long double>(w)));
  std::sort(sizes.begin(), sizes.end());
  std::sort(targets.begin(), targets.end());
  for (std::size_t k = 0; k < sizes.size(); ++k)
    if (std::abs(sizes[k] - targets[k]) > tolerance * targets[k]) return false;
  return true;
}

// Coefficient of T^{n-k} on the left is a_k q^{wk}; on the right it is
// +-q^{nw/2} a_{n-k}.
bool functional_equation_check(const IntPolynomial& poly, std::uint64_t q, unsigned w) {
  const std::size_t n = poly.degree();
  if (n == 0) return true;
  if ((n * w) % 2 != 0) return false;
  const mpz_class half = pow(q, static_cast<unsigned long>(n * w / 2));
  for (int sign : {1, -1}) {
    bool ok = true;
    for (std::size_t k = 0; k <= n && ok; ++k) {
      const mpz_class lhs = poly[k] * pow(q, static_cast<unsigned long>(w * k));
      const mpz_class rhs = sign * half * poly[n - k];
      ok = (lhs == rhs);
    }
    if (ok) return true;
  }
  return false;
}

std::vector<IntPolynomial> enumerate_weil_quadratics(std::uint64_t q, unsigned w) {
  if (q < 2) throw DomainError("enumerate_weil_quadratics: q must be at least 2");
  const mpz_class qw = pow(q, w);
  mpz_class bound;
  mpz_class four_qw = 4 * qw;
  mpz_sqrt(bound.get_mpz_t(), four_qw.get_mpz_t());
  std::vector<IntPolynomial> out;
  for (mpz_class a = -bound; a <= bound; ++a) out.emplace_back(std::vector<mpz_class>{qw, -a, 1});
  return out;
}

WeilDatum make_weil_datum(IntPolynomial poly, std::uint64_t q, std::vector<unsigned> weights,
                          unsigned weight_budget, double tolerance) {
  const auto pp = as_prime_power(q);
  if (!pp) throw DomainError("WeilDatum: q = " + std::to_string(q) + " is not a prime power");
  if (weights.size() != poly.degree())
    throw DomainError("WeilDatum: need one weight per root (degree " +
                      std::to_string(poly.degree()) + ", got " + std::to_string(weights.size()) +
                      ")");
  const unsigned long total = std::accumulate(weights.begin(), weights.end(), 0UL);
  if (total > weight_budget)
    throw DomainError("WeilDatum: sum of weights " + std::to_string(total) +
                      " exceeds budget w_bar = " + std::to_string(weight_budget));
  std::sort(weights.begin(), weights.end());
  if (!validate_weights(poly, q, weights, tolerance))
    throw DomainError("WeilDatum: roots of " + poly.to_string() +
                      " do not have absolute values q^{w_k/2}");
  return WeilDatum{std::move(poly), q, pp->prime, pp->exponent, std::move(weights), weight_budget};
}

}  // namespace semistable
