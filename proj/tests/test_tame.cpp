#include <doctest.h>

#include <algorithm>

#include "semistable/error.hpp"
#include "semistable/tame.hpp"

using namespace semistable;

namespace {
using U = std::vector<std::uint64_t>;

TameCharacterExponent ch(std::uint64_t ell, unsigned h, std::uint64_t n) {
  return TameCharacterExponent::make(ell, h, n);
}

std::uint64_t ipow(std::uint64_t b, unsigned e) {
  std::uint64_t out = 1;
  while (e--) out *= b;
  return out;
}
}  // namespace

TEST_CASE("TameCharacterExponent validation") {
  CHECK(ch(5, 2, 23).modulus() == 24);
  CHECK_THROWS_AS(ch(5, 2, 24), DomainError);
  CHECK_THROWS_AS(ch(6, 1, 0), DomainError);
  CHECK_THROWS_AS(ch(5, 0, 0), DomainError);
  CHECK_THROWS_AS(ch(2, 64, 0), DomainError);
  CHECK_THROWS_AS(WeightMultiset(U{5}, 5), DomainError);
  CHECK(WeightMultiset(U{4, 0}, 5).weights() == U{0, 4});
}

TEST_CASE("digit_weights examples") {
  CHECK(digit_weights(ch(5, 2, 7)) == WeightMultiset(U{2, 1}, 5));
  CHECK(digit_weights(ch(3, 3, 13)) == WeightMultiset(U{1, 1, 1}, 3));
  CHECK(digit_weights(ch(7, 1, 4)) == WeightMultiset(U{4}, 7));
  CHECK(digit_weights(ch(5, 3, 0)).size() == 3);
}

TEST_CASE("frobenius_orbit and canonical_exponent examples") {
  CHECK(frobenius_orbit(ch(5, 2, 7)) == U{7, 11});
  CHECK(frobenius_orbit(ch(3, 2, 0)) == U{0, 0});
  CHECK(frobenius_orbit(ch(3, 3, 13)) == U{13, 13, 13});
  CHECK(canonical_exponent(ch(5, 2, 11)) == 7);
  for (std::uint64_t n = 0; n <= 5; ++n) CHECK(canonical_exponent(ch(7, 1, n)) == n);
  CHECK(canonical_exponent(ch(3, 3, 13)) == 13);
}

TEST_CASE("level_one_norm_exponent examples") {
  CHECK(level_one_norm_exponent(3, 3) == 13);
  CHECK(level_one_norm_exponent(5, 2) == 6);
  CHECK(digit_weights(ch(5, 2, 12)) == WeightMultiset(U{2, 2}, 5));
  CHECK(level_one_norm_exponent(2, 4) == 15);
}

TEST_CASE("is_uniform and caruso_range_check examples") {
  CHECK(is_uniform(WeightMultiset(U{2, 2, 2}, 7), 2, 7));
  CHECK_FALSE(is_uniform(WeightMultiset(U{0, 1}, 5), 0, 5));
  CHECK(is_uniform(WeightMultiset(U{}, 5), 3, 5));
  CHECK_THROWS_AS(is_uniform(WeightMultiset(U{4}, 5), 4, 5), WeightOutOfRange);
  CHECK(caruso_range_check(WeightMultiset(U{0, 1, 2}, 5), 1, 2));
  CHECK_FALSE(caruso_range_check(WeightMultiset(U{3}, 5), 1, 2));
  for (unsigned e = 1; e <= 3; ++e)
    for (unsigned r = 0; r <= 3; ++r) CHECK(caruso_range_check(WeightMultiset(U{0, e * r}, 11), e, r));
}

// Exhaustive over ell in {2,3,5,7}, h <= 3.
TEST_CASE("digit multisets are Frobenius invariant and respect the norm relation") {
  for (std::uint64_t ell : {2, 3, 5, 7}) {
    for (unsigned h = 1; h <= 3; ++h) {
      const std::uint64_t top = ipow(ell, h) - 2;
      for (std::uint64_t n = 0; n <= top; ++n) {
        const auto c = ch(ell, h, n);
        const auto digits = digit_weights(c);
        CHECK(digits.size() == h);
        for (auto m : frobenius_orbit(c)) CHECK(digit_weights(ch(ell, h, m)) == digits);

        const auto canon = canonical_exponent(c);
        CHECK(canonical_exponent(ch(ell, h, canon)) == canon);
        const auto orbit = frobenius_orbit(c);
        CHECK(canon == *std::min_element(orbit.begin(), orbit.end()));

        std::uint64_t sum = 0;
        for (auto x : digits.weights()) sum += x;
        if (ell > 2) CHECK(sum % (ell - 1) == n % (ell - 1));
      }
      const auto norm = level_one_norm_exponent(ell, h);
      CHECK(norm == (ipow(ell, h) - 1) / (ell - 1));
      // k = ell - 1 gives ell^h - 1, outside the exponent range; it is theta_1^0.
      for (std::uint64_t k = 0; k + 1 < ell; ++k)
        CHECK(digit_weights(ch(ell, h, k * norm)) == WeightMultiset(U(h, k), ell));
    }
  }
}
