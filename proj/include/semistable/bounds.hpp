#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace semistable {

/// Invariants of the number field K. The discriminant and the narrow class
/// number are supplied by the caller; nothing here factors ideals.
struct FieldInvariants {
  unsigned d;                      // [K:Q]
  mpz_class disc;                  // d_K, nonzero
  unsigned h_plus;                 // narrow class number
  bool galois_odd_degree = false;  // K/Q Galois of odd degree

  static FieldInvariants make(unsigned d, mpz_class disc, unsigned h_plus,
                              bool galois_odd_degree = false);
};

/// Where ell sits relative to K. divides_disc is computed from d_K;
/// splits_in_K is the caller's word and is forced false when d = 1.
struct PrimeSituation {
  mpz_class ell;
  bool divides_disc;
  bool splits_in_K;

  static PrimeSituation make(const FieldInvariants& inv, mpz_class ell, bool splits_in_K);
};

enum class Variant { Bullet, Circle };

/// bullet = (n, ell0, r, w), circle = (n, ell0, r, w_bar).
struct RepFamilyParams {
  unsigned n;
  std::uint64_t ell0;
  unsigned r;
  Variant variant;
  unsigned w;      // meaningful for Bullet only
  unsigned w_bar;  // meaningful for Circle only
  bool cyclotomic;

  static RepFamilyParams bullet(unsigned n, std::uint64_t ell0, unsigned r, unsigned w,
                                bool cyclotomic = false);
  static RepFamilyParams circle(unsigned n, std::uint64_t ell0, unsigned r, unsigned w_bar,
                                bool cyclotomic = false);

  // n*w for bullet families, w_bar for circle families.
  unsigned weight_budget() const;
};

struct DerivedConstants {
  mpq_class M;
  mpz_class c_n;
  mpq_class eps1, eps2, eps1p, eps2p;
  mpz_class C1, C2, C1p, C2p;
};

/// max_m binom(n, m).
mpz_class central_binomial(unsigned n);

/// 2 * c_n * ell0^ceil(exponent).
mpz_class scaled_threshold(unsigned n, std::uint64_t ell0, const mpq_class& exponent);

DerivedConstants derived_constants(const FieldInvariants& inv, const RepFamilyParams& p);

enum class Conclusion { Empty, NotDecided };
enum class Theorem { Cor1, Cor2, Trivial, RTst, GRTst, Ell, Et };
enum class Situation { A, B, C, D, E, Trivial, None };
enum class Obstruction { None, NonIntegral, RangeExceeded, DivisibilityFails };

std::string_view to_string(Conclusion c);
std::string_view to_string(Theorem t);
std::string_view to_string(Situation s);
std::string_view to_string(Obstruction o);

struct TraceEntry {
  std::string scope;  // "standing", "a".."e" or "trivial"
  std::string hypothesis;
  bool holds;
};

struct SituationOutcome {
  Situation situation;
  mpz_class threshold;
  // Every hypothesis that does not involve ell holds.
  bool applicable;
  bool fired;
};

/// Emptiness certificate. Empty means every entry of trace holds and ell
/// exceeds threshold; NotDecided asserts nothing. On Empty the trace holds
/// the standing hypotheses and the cited situation only, on NotDecided it
/// holds everything that was evaluated. situations always lists every
/// situation of the theorem.
struct Verdict {
  Conclusion conclusion;
  Theorem theorem;
  Situation situation;
  mpz_class threshold;
  std::vector<TraceEntry> trace;
  std::vector<SituationOutcome> situations;
};

Verdict decide_cor1(const FieldInvariants& inv, const RepFamilyParams& p, const PrimeSituation& ps);
Verdict decide_cor2(const FieldInvariants& inv, const RepFamilyParams& p, const PrimeSituation& ps);
Verdict decide_trivial(const FieldInvariants& inv, const RepFamilyParams& p, const mpz_class& ell);

enum class RtVariant { St, StWithEll0 };

/// ell0 is read only for StWithEll0.
Verdict decide_rt(const FieldInvariants& inv, unsigned g, const PrimeSituation& ps, RtVariant variant,
                  std::uint64_t ell0 = 0);

/// Empty reads "E[ell] is irreducible".
Verdict decide_ec_irred(const FieldInvariants& inv, std::uint64_t ell_E, const PrimeSituation& ps);

/// Empty reads "H^w is not residually Borel". Throws WEven for even w.
Verdict decide_etale(const FieldInvariants& inv, unsigned b_w, std::uint64_t ell_X, unsigned w,
                     const PrimeSituation& ps);

/// Which contradiction a uniform tame weight e*w/2 runs into.
Obstruction parity_obstruction(unsigned e, unsigned w, unsigned r, unsigned n);

/// Least prime ell whose verdict is Empty, searching upward from the
/// smallest applicable threshold in `probe`. nullopt when no situation is
/// applicable. `decide` is re-run on every candidate.
std::optional<mpz_class> least_certified_ell(const Verdict& probe,
                                             const std::function<Verdict(const mpz_class&)>& decide);

}  // namespace semistable
