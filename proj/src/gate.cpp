#include "semistable/gate.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>

#include "semistable/bounds.hpp"
#include "semistable/error.hpp"
#include "semistable/primes.hpp"

namespace semistable {

CongruenceInstance CongruenceInstance::make(WeilDatum datum, unsigned s, unsigned u,
                                            std::vector<unsigned> t, mpz_class ell, unsigned d,
                                            unsigned r) {
  if (s > u) throw DomainError("gate: need 0 <= s <= u, got s = " + std::to_string(s) +
                               ", u = " + std::to_string(u));
  if (t.size() != datum.poly.degree())
    throw DomainError("gate: t needs " + std::to_string(datum.poly.degree()) + " entries, got " +
                      std::to_string(t.size()));
  const unsigned long cap = static_cast<unsigned long>(r) * u;
  for (unsigned tk : t)
    if (tk > cap)
      throw DomainError("gate: t_k = " + std::to_string(tk) + " exceeds r*u = " + std::to_string(cap));
  if (!is_prime(ell)) throw DomainError("gate: ell = " + ell.get_str() + " is not prime");
  if (ell == pow(datum.ell0, 1))
    throw DomainError("gate: ell must not divide q = " + std::to_string(datum.q));
  if (d == 0) throw DomainError("gate: d must be at least 1");
  if (datum.residue_degree > d)
    throw DomainError("gate: q = ell0^" + std::to_string(datum.residue_degree) +
                      " cannot be a residue field of a degree " + std::to_string(d) + " field");
  std::sort(t.begin(), t.end());
  return CongruenceInstance{std::move(datum), s, u, std::move(t), std::move(ell), d, r};
}

bool CongruenceInstance::operator<(const CongruenceInstance& other) const {
  if (datum.poly != other.datum.poly) return datum.poly < other.datum.poly;
  return std::tie(s, t, ell) < std::tie(other.s, other.t, other.ell);
}

std::string_view to_string(GateOutcome o) {
  switch (o) {
    case GateOutcome::ForcedEqual: return "ForcedEqual";
    case GateOutcome::CongruentBelowBound: return "CongruentBelowBound";
    case GateOutcome::NotCongruent: return "NotCongruent";
  }
  return "?";
}

mpz_class lemma_bound(unsigned n, std::uint64_t ell0, unsigned d, const mpq_class& M, unsigned u) {
  if (n == 0) throw DomainError("lemma_bound: n must be at least 1");
  const mpq_class exponent = mpq_class(d) * M * u;
  return scaled_threshold(n, ell0, exponent);
}

mpz_class lemma_bound(const CongruenceInstance& inst) {
  const unsigned n = static_cast<unsigned>(inst.datum.poly.degree());
  mpq_class M = std::max(mpq_class(n * inst.r), mpq_class(inst.datum.weight_budget, 2));
  M.canonicalize();
  return lemma_bound(n, inst.datum.ell0, inst.d, M, inst.u);
}

bool symmetric_congruence(const CongruenceInstance& inst) {
  const auto lhs = reduce_mod(power_transform(inst.datum.poly, inst.s), inst.ell);
  const auto rhs = reduce_mod(from_prime_power_roots(inst.datum.q, inst.t), inst.ell);
  return lhs == rhs;
}

GateVerdict forced_equality(const CongruenceInstance& inst) {
  GateVerdict v{GateOutcome::NotCongruent, lemma_bound(inst), symmetric_congruence(inst), {}};
  if (!v.congruent) return v;
  if (inst.ell <= v.bound) {
    v.outcome = GateOutcome::CongruentBelowBound;
    return v;
  }
  const IntPolynomial powered = power_transform(inst.datum.poly, inst.s);
  const IntPolynomial target = from_prime_power_roots(inst.datum.q, inst.t);
  if (powered != target)
    throw LemmaViolation("congruent mod " + inst.ell.get_str() + " above bound " + v.bound.get_str() +
                         " but " + powered.to_string() + " != " + target.to_string());
  // |alpha_k^s| = q^{s w_k / 2} = q^{t_k}, so the weights must line up too.
  std::vector<unsigned> expected;
  for (unsigned w : inst.datum.weights) {
    if ((inst.s * w) % 2 != 0)
      throw LemmaViolation("s*w_k = " + std::to_string(inst.s * w) +
                           " is odd yet alpha^s equals a power of q");
    expected.push_back(inst.s * w / 2);
  }
  std::sort(expected.begin(), expected.end());
  if (expected != inst.t) throw LemmaViolation("exact equality holds but {s*w_k/2} != {t_k}");
  v.outcome = GateOutcome::ForcedEqual;
  v.matched = inst.t;
  return v;
}

}  // namespace semistable
