#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "semistable/weil.hpp"

namespace semistable {

/// A candidate congruence {alpha_k^s} = {q^{t_k}} mod ell for a Weil datum.
struct CongruenceInstance {
  WeilDatum datum;
  unsigned s;
  unsigned u;
  std::vector<unsigned> t;  // sorted ascending
  mpz_class ell;
  unsigned d;  // [K:Q]
  unsigned r;

  /// Throws DomainError unless 0 <= s <= u, |t| = n, 0 <= t_k <= r*u, ell is
  /// prime and coprime to q, and q = ell0^f with f <= d.
  static CongruenceInstance make(WeilDatum datum, unsigned s, unsigned u, std::vector<unsigned> t,
                                 mpz_class ell, unsigned d, unsigned r);

  bool operator<(const CongruenceInstance& other) const;
};

enum class GateOutcome { ForcedEqual, CongruentBelowBound, NotCongruent };

std::string_view to_string(GateOutcome o);

struct GateVerdict {
  GateOutcome outcome;
  mpz_class bound;
  bool congruent;
  std::vector<unsigned> matched;  // {s*w_k/2} = {t_k}, ForcedEqual only
};

/// 2 * c_n * ell0^ceil(d*M*u).
mpz_class lemma_bound(unsigned n, std::uint64_t ell0, unsigned d, const mpq_class& M, unsigned u);

/// Bound for an instance, with M = max{n*r, w_bar/2} recomputed from it.
mpz_class lemma_bound(const CongruenceInstance& inst);

/// power_transform(poly, s) == from_prime_power_roots(q, t) coefficient-wise mod ell.
bool symmetric_congruence(const CongruenceInstance& inst);

/// Throws LemmaViolation when the instance is congruent above the bound
/// yet the polynomials differ over Z.
GateVerdict forced_equality(const CongruenceInstance& inst);

struct SearchConfig {
  std::uint64_t q = 2;
  std::vector<unsigned> degrees{2};  // each even and <= 4
  unsigned s_max = 1;
  std::uint64_t ell_max = 100;
  unsigned r = 1;
  std::optional<unsigned> d;  // defaults to the residue degree of q
  std::uint64_t budget = 10'000'000;
  // Replaces the quadratic-product corpus when set.
  std::optional<std::vector<WeilDatum>> seeds;
};

/// Number of (poly, s, t, ell) instances the search would visit.
std::uint64_t corpus_size(const SearchConfig& config);

/// Every corpus instance that is congruent mod ell but not equal over Z,
/// sorted by (poly, s, t, ell). u = s throughout. Shards run under OpenMP.
/// Throws CorpusTooLarge above the budget and LemmaViolation if a hit lies
/// above its bound.
std::vector<CongruenceInstance> counterexample_search(const SearchConfig& config);

/// Single-threaded reference for counterexample_search built directly on
/// symmetric_congruence; same output.
std::vector<CongruenceInstance> counterexample_search_serial(const SearchConfig& config);

}  // namespace semistable
