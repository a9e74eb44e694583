#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace semistable {

/// Monic polynomial over Z, coefficients stored lowest degree first.
///
/// Holds characteristic polynomials of Frobenius; the roots are never
/// materialised, all manipulation goes through symmetric functions.
class IntPolynomial {
 public:
  /// Throws NonMonicPolynomial when the sequence is empty or its last entry
  /// is not exactly 1. No normalisation is attempted.
  explicit IntPolynomial(std::vector<mpz_class> coefficients);

  /// The polynomial T^n.
  static IntPolynomial monomial(std::size_t degree);

  std::size_t degree() const { return coefficients_.size() - 1; }
  const std::vector<mpz_class>& coefficients() const { return coefficients_; }
  const mpz_class& operator[](std::size_t i) const { return coefficients_[i]; }

  IntPolynomial operator*(const IntPolynomial& other) const;

  bool operator==(const IntPolynomial& other) const = default;
  // Lexicographic on (degree, coefficients low to high).
  bool operator<(const IntPolynomial& other) const;

  // "T^2 + T + 2"
  std::string to_string() const;

 private:
  std::vector<mpz_class> coefficients_;
};

/// Newton power sums p_1..p_m of the roots of a monic integer polynomial.
struct PowerSums {
  std::vector<mpz_class> values;  // values[j - 1] = p_j
  std::size_t source_degree = 0;
};

PowerSums power_sums(const IntPolynomial& f, std::size_t m);

/// Inverse of power_sums: the monic degree-n polynomial whose roots have
/// first power sums p.values[0..n). Throws NonIntegralSymmetricFunction when
/// some m*e_m is not divisible by m.
IntPolynomial from_power_sums(const PowerSums& p, std::size_t n);

/// Monic polynomial whose roots are the s-th powers of the roots of f.
/// s = 0 gives (T - 1)^n.
IntPolynomial power_transform(const IntPolynomial& f, unsigned s);

/// prod_k (T - q^{t_k}).
IntPolynomial from_prime_power_roots(std::uint64_t q, std::span<const unsigned> t);

/// Every coefficient reduced into [0, modulus).
std::vector<mpz_class> reduce_mod(const IntPolynomial& f, const mpz_class& modulus);

}  // namespace semistable
