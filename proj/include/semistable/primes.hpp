#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <gmpxx.h>

namespace semistable {

// Deterministic for n < 2^64 (Baillie-PSW); beyond that GMP's fixed-seed
// test, which still gives the same answer on every run.
bool is_prime(const mpz_class& n);
bool is_prime(std::uint64_t n);

// Primes p with lo <= p <= hi, ascending.
std::vector<std::uint64_t> primes_in_range(std::uint64_t lo, std::uint64_t hi);

// Smallest prime strictly greater than n.
mpz_class next_prime(const mpz_class& n);

// If q = p^f with p prime and f >= 1, returns {p, f}.
struct PrimePower {
  std::uint64_t prime;
  unsigned exponent;
};
std::optional<PrimePower> as_prime_power(std::uint64_t q);

mpz_class pow(std::uint64_t base, unsigned long exponent);
mpz_class binomial(unsigned n, unsigned k);

}  // namespace semistable
