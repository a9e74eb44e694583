#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "semistable/intpoly.hpp"

namespace semistable {

inline constexpr double kDefaultWeilTolerance = 1e-6;
inline constexpr std::size_t kMaxRootFindingDegree = 64;

/// A characteristic polynomial of Frobenius at a place above ell0 with
/// residue field size q = ell0^f, together with its weights w_1..w_n and
/// the budget w_bar >= sum w_k. Only obtainable through make_weil_datum.
struct WeilDatum {
  IntPolynomial poly;
  std::uint64_t q;
  std::uint64_t ell0;
  unsigned residue_degree;       // f in q = ell0^f
  std::vector<unsigned> weights;  // sorted ascending
  unsigned weight_budget;
};

/// Validates every WeilDatum invariant (q a prime power, one weight per
/// root, sum of weights within budget, root sizes q^{w_k/2}) and throws
/// DomainError naming the first one that fails.
WeilDatum make_weil_datum(IntPolynomial poly, std::uint64_t q, std::vector<unsigned> weights,
                          unsigned weight_budget, double tolerance = kDefaultWeilTolerance);

/// Complex roots with multiplicity. Repeated roots are separated exactly by
/// square-free decomposition before the numeric solve. Throws
/// RootFindingFailure above kMaxRootFindingDegree or when Newton polishing
/// fails to converge.
std::vector<std::complex<long double>> numeric_roots(const IntPolynomial& poly);

/// True iff the sorted root absolute values match the sorted targets
/// q^{w_k/2} within relative tolerance.
bool validate_weights(const IntPolynomial& poly, std::uint64_t q, std::span<const unsigned> weights,
                      double tolerance = kDefaultWeilTolerance);

/// Exact test of T^n poly(q^w / T) = +-q^{nw/2} poly(T). Necessary (not
/// sufficient) for all roots to have size q^{w/2}. False when nw is odd.
bool functional_equation_check(const IntPolynomial& poly, std::uint64_t q, unsigned w);

/// T^2 - aT + q^w for every integer a with a^2 <= 4 q^w, a ascending.
std::vector<IntPolynomial> enumerate_weil_quadratics(std::uint64_t q, unsigned w);

}  // namespace semistable
