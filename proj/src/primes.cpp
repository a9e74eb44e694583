#include "semistable/primes.hpp"

namespace semistable {

bool is_prime(const mpz_class& n) {
  if (n < 2) return false;
  return mpz_probab_prime_p(n.get_mpz_t(), 30) != 0;
}

bool is_prime(std::uint64_t n) {
  mpz_class z;
  mpz_import(z.get_mpz_t(), 1, 1, sizeof(n), 0, 0, &n);
  return is_prime(z);
}

std::vector<std::uint64_t> primes_in_range(std::uint64_t lo, std::uint64_t hi) {
  std::vector<std::uint64_t> out;
  if (hi < 2 || lo > hi) return out;
  if (lo < 2) lo = 2;
  std::vector<bool> composite(hi + 1, false);
  for (std::uint64_t p = 2; p * p <= hi; ++p) {
    if (composite[p]) continue;
    for (std::uint64_t m = p * p; m <= hi; m += p) composite[m] = true;
  }
  for (std::uint64_t p = lo; p <= hi; ++p)
    if (!composite[p]) out.push_back(p);
  return out;
}

mpz_class next_prime(const mpz_class& n) {
  mpz_class out;
  mpz_nextprime(out.get_mpz_t(), n.get_mpz_t());
  return out;
}

std::optional<PrimePower> as_prime_power(std::uint64_t q) {
  if (q < 2) return std::nullopt;
  std::uint64_t p = 0;
  for (std::uint64_t c = 2; c * c <= q; ++c) {
    if (q % c == 0) {
      p = c;
      break;
    }
  }
  if (p == 0) return PrimePower{q, 1};
  unsigned f = 0;
  while (q % p == 0) {
    q /= p;
    ++f;
  }
  if (q != 1) return std::nullopt;
  return PrimePower{p, f};
}

mpz_class pow(std::uint64_t base, unsigned long exponent) {
  mpz_class b;
  mpz_import(b.get_mpz_t(), 1, 1, sizeof(base), 0, 0, &base);
  mpz_class out;
  mpz_pow_ui(out.get_mpz_t(), b.get_mpz_t(), exponent);
  return out;
}

mpz_class binomial(unsigned n, unsigned k) {
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

}  // namespace semistable
