#pragma once

#include <cstdint>
#include <vector>

namespace semistable {

/// theta_h^{exponent}: a character of the tame quotient at level h, with
/// 0 <= exponent <= ell^h - 2.
struct TameCharacterExponent {
  std::uint64_t ell;
  unsigned level;
  std::uint64_t exponent;

  /// Throws DomainError unless ell is prime, level >= 1, ell^level fits in
  /// 64 bits and exponent < ell^level - 1.
  static TameCharacterExponent make(std::uint64_t ell, unsigned level, std::uint64_t exponent);

  std::uint64_t modulus() const;  // ell^level - 1
};

/// Multiset of tame inertia weights, each in [0, ell - 1]; kept sorted.
class WeightMultiset {
 public:
  WeightMultiset(std::vector<std::uint64_t> weights, std::uint64_t ell);

  const std::vector<std::uint64_t>& weights() const { return weights_; }
  std::uint64_t ell() const { return ell_; }
  std::size_t size() const { return weights_.size(); }

  bool operator==(const WeightMultiset&) const = default;

 private:
  std::vector<std::uint64_t> weights_;
  std::uint64_t ell_;
};

/// The h base-ell digits of the exponent, leading zeros included.
WeightMultiset digit_weights(const TameCharacterExponent& c);

/// (n_f, n_f*ell, ..., n_f*ell^{h-1}) mod ell^h - 1.
std::vector<std::uint64_t> frobenius_orbit(const TameCharacterExponent& c);

/// Least element of the Frobenius orbit.
std::uint64_t canonical_exponent(const TameCharacterExponent& c);

/// 1 + ell + ... + ell^{h-1}.
std::uint64_t level_one_norm_exponent(std::uint64_t ell, unsigned h);

/// Throws WeightOutOfRange unless 0 <= w < ell - 1.
bool is_uniform(const WeightMultiset& w_set, std::uint64_t w, std::uint64_t ell);

/// Every weight lies in [0, e*r].
bool caruso_range_check(const WeightMultiset& w_set, unsigned e, unsigned r);

}  // namespace semistable
