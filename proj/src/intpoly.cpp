#include "semistable/intpoly.hpp"

#include <algorithm>
#include <sstream>

#include "semistable/error.hpp"
#include "semistable/primes.hpp"

namespace semistable {

IntPolynomial::IntPolynomial(std::vector<mpz_class> coefficients)
    : coefficients_(std::move(coefficients)) {
  if (coefficients_.empty())
    throw NonMonicPolynomial("polynomial needs at least one coefficient");
  if (coefficients_.back() != 1)
    throw NonMonicPolynomial("leading coefficient must be exactly 1, got " +
                             coefficients_.back().get_str());
}

IntPolynomial IntPolynomial::monomial(std::size_t degree) {
  std::vector<mpz_class> c(degree + 1, 0);
  c.back() = 1;
  return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& other) const {
  std::vector<mpz_class> c(degree() + other.degree() + 1, 0);
  for (std::size_t i = 0; i < coefficients_.size(); ++i)
    for (std::size_t j = 0; j < other.coefficients_.size(); ++j)
      c[i + j] += coefficients_[i] * other.coefficients_[j];
  return IntPolynomial(std::move(c));
}

bool IntPolynomial::operator<(const IntPolynomial& other) const {
  if (degree() != other.degree()) return degree() < other.degree();
  return std::lexicographical_compare(coefficients_.begin(), coefficients_.end(),
                                      other.coefficients_.begin(),
                                      other.coefficients_.end());
}

std::string IntPolynomial::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = coefficients_.size(); k-- > 0;) {
    const mpz_class& c = coefficients_[k];
    if (c == 0) continue;
    mpz_class mag = abs(c);
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      out << mag;
      continue;
    }
    if (mag != 1) out << mag;
    out << "T";
    if (k > 1) out << "^" << k;
  }
  if (first) out << "0";
  return out.str();
}

// With f = T^n + c_1 T^{n-1} + ... + c_n (c_i = coefficient of T^{n-i}),
// Newton's identities read p_j = -(j c_j + sum_{i<j} c_i p_{j-i}), c_j = 0
// for j > n.
PowerSums power_sums(const IntPolynomial& f, std::size_t m) {
  const std::size_t n = f.degree();
  auto c = [&](std::size_t i) -> mpz_class {
    return i <= n ? f[n - i] : mpz_class(0);
  };
  PowerSums out;
  out.source_degree = n;
  out.values.reserve(m);
  for (std::size_t j = 1; j <= m; ++j) {
    mpz_class acc = c(j) * static_cast<unsigned long>(j);
    for (std::size_t i = 1; i < j && i <= n; ++i) acc += c(i) * out.values[j - i - 1];
    out.values.push_back(-acc);
  }
  return out;
}

// k e_k = sum_{i=1}^k (-1)^{i-1} e_{k-i} p_i, then the T^{n-k} coefficient
// is (-1)^k e_k.
IntPolynomial from_power_sums(const PowerSums& p, std::size_t n) {
  if (p.values.size() < n)
    throw DomainError("from_power_sums needs " + std::to_string(n) +
                      " power sums, got " + std::to_string(p.values.size()));
  std::vector<mpz_class> e(n + 1, 0);
  e[0] = 1;
  for (std::size_t k = 1; k <= n; ++k) {
    mpz_class acc = 0;
    for (std::size_t i = 1; i <= k; ++i) {
      if (i % 2 == 1)
        acc += e[k - i] * p.values[i - 1];
      else
        acc -= e[k - i] * p.values[i - 1];
    }
    if (!mpz_divisible_ui_p(acc.get_mpz_t(), k))
      throw NonIntegralSymmetricFunction("e_" + std::to_string(k) + " = " + acc.get_str() +
                                         "/" + std::to_string(k) + " is not an integer");
    mpz_divexact_ui(e[k].get_mpz_t(), acc.get_mpz_t(), k);
  }
  std::vector<mpz_class> coeffs(n + 1);
  for (std::size_t k = 0; k <= n; ++k) coeffs[n - k] = (k % 2 == 0) ? e[k] : mpz_class(-e[k]);
  return IntPolynomial(std::move(coeffs));
}

IntPolynomial power_transform(const IntPolynomial& f, unsigned s) {
  const std::size_t n = f.degree();
  if (s == 0) {
    std::vector<unsigned> zeros(n, 0);
    return from_prime_power_roots(2, zeros);
  }
  if (s == 1 || n == 0) return f;
  PowerSums all = power_sums(f, n * s);
  PowerSums picked;
  picked.source_degree = n;
  picked.values.reserve(n);
  for (std::size_t k = 1; k <= n; ++k) picked.values.push_back(all.values[k * s - 1]);
  return from_power_sums(picked, n);
}

IntPolynomial from_prime_power_roots(std::uint64_t q, std::span<const unsigned> t) {
  std::vector<mpz_class> c{1};
  for (unsigned tk : t) {
    const mpz_class root = pow(q, tk);
    std::vector<mpz_class> next(c.size() + 1, 0);
    for (std::size_t i = 0; i < c.size(); ++i) {
      next[i + 1] += c[i];
      next[i] -= root * c[i];
    }
    c = std::move(next);
  }
  return IntPolynomial(std::move(c));
}

std::vector<mpz_class> reduce_mod(const IntPolynomial& f, const mpz_class& modulus) {
  std::vector<mpz_class> out;
  out.reserve(f.coefficients().size());
  for (const auto& c : f.coefficients()) {
    mpz_class r;
    mpz_fdiv_r(r.get_mpz_t(), c.get_mpz_t(), modulus.get_mpz_t());
    out.push_back(r);
  }
  return out;
}

}  // namespace semistable
