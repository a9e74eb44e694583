#include "semistable/tame.hpp"

#include <algorithm>
#include <string>

#include "semistable/error.hpp"
#include "semistable/primes.hpp"

namespace semistable {
namespace {

bool checked_pow(std::uint64_t base, unsigned exp, std::uint64_t& out) {
  out = 1;
  for (unsigned i = 0; i < exp; ++i)
    if (__builtin_mul_overflow(out, base, &out)) return false;
  return true;
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

}  // namespace

TameCharacterExponent TameCharacterExponent::make(std::uint64_t ell, unsigned level,
                                                  std::uint64_t exponent) {
  if (!is_prime(ell)) throw DomainError("tame character: ell = " + std::to_string(ell) + " is not prime");
  if (level == 0) throw DomainError("tame character: level must be at least 1");
  std::uint64_t power = 0;
  if (!checked_pow(ell, level, power))
    throw DomainError("tame character: ell^h does not fit in 64 bits");
  if (exponent > power - 2)
    throw DomainError("tame character: exponent " + std::to_string(exponent) +
                      " outside [0, ell^h - 2] = [0, " + std::to_string(power - 2) + "]");
  return TameCharacterExponent{ell, level, exponent};
}

std::uint64_t TameCharacterExponent::modulus() const {
  std::uint64_t power = 0;
  checked_pow(ell, level, power);
  return power - 1;
}

WeightMultiset::WeightMultiset(std::vector<std::uint64_t> weights, std::uint64_t ell)
    : weights_(std::move(weights)), ell_(ell) {
  for (auto w : weights_)
    if (w >= ell_)
      throw DomainError("tame weight " + std::to_string(w) + " outside [0, ell - 1] for ell = " +
                        std::to_string(ell_));
  std::sort(weights_.begin(), weights_.end());
}

WeightMultiset digit_weights(const TameCharacterExponent& c) {
  std::vector<std::uint64_t> digits;
  digits.reserve(c.level);
  std::uint64_t n = c.exponent;
  for (unsigned i = 0; i < c.level; ++i) {
    digits.push_back(n % c.ell);
    n /= c.ell;
  }
  return WeightMultiset(std::move(digits), c.ell);
}

std::vector<std::uint64_t> frobenius_orbit(const TameCharacterExponent& c) {
  const std::uint64_t m = c.modulus();
  std::vector<std::uint64_t> orbit;
  orbit.reserve(c.level);
  std::uint64_t x = c.exponent % m;
  for (unsigned i = 0; i < c.level; ++i) {
    orbit.push_back(x);
    x = mulmod(x, c.ell, m);
  }
  return orbit;
}

std::uint64_t canonical_exponent(const TameCharacterExponent& c) {
  const auto orbit = frobenius_orbit(c);
  return *std::min_element(orbit.begin(), orbit.end());
}

std::uint64_t level_one_norm_exponent(std::uint64_t ell, unsigned h) {
  if (h == 0) throw DomainError("level_one_norm_exponent: h must be at least 1");
  std::uint64_t sum = 0, term = 1;
  for (unsigned i = 0; i < h; ++i) {
    if (__builtin_add_overflow(sum, term, &sum))
      throw DomainError("level_one_norm_exponent: overflow");
    if (i + 1 < h && __builtin_mul_overflow(term, ell, &term))
      throw DomainError("level_one_norm_exponent: overflow");
  }
  return sum;
}

bool is_uniform(const WeightMultiset& w_set, std::uint64_t w, std::uint64_t ell) {
  if (ell < 2 || w + 1 >= ell)
    throw WeightOutOfRange("uniform weight w = " + std::to_string(w) +
                           " must satisfy 0 <= w < ell - 1 = " + std::to_string(ell - 1));
  return std::all_of(w_set.weights().begin(), w_set.weights().end(),
                     [w](std::uint64_t x) { return x == w; });
}

bool caruso_range_check(const WeightMultiset& w_set, unsigned e, unsigned r) {
  if (e == 0) throw DomainError("caruso_range_check: ramification index must be at least 1");
  const std::uint64_t top = static_cast<std::uint64_t>(e) * r;
  return std::all_of(w_set.weights().begin(), w_set.weights().end(),
                     [top](std::uint64_t x) { return x <= top; });
}

}  // namespace semistable
