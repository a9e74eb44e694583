#include "semistable/bounds.hpp"

#include <algorithm>

#include "semistable/error.hpp"
#include "semistable/primes.hpp"

namespace semistable {

FieldInvariants FieldInvariants::make(unsigned d, mpz_class disc, unsigned h_plus,
                                      bool galois_odd_degree) {
  if (d == 0) throw DomainError("field: degree d must be at least 1");
  if (disc == 0) throw DomainError("field: discriminant must be nonzero");
  if (h_plus == 0) throw DomainError("field: narrow class number must be at least 1");
  if (galois_odd_degree && d % 2 == 0)
    throw DomainError("field: galois_odd_degree requires odd d, got d = " + std::to_string(d));
  if (d == 1 && (disc != 1 || h_plus != 1))
    throw DomainError("field: d = 1 is Q, which has discriminant 1 and narrow class number 1");
  return FieldInvariants{d, std::move(disc), h_plus, galois_odd_degree};
}

PrimeSituation PrimeSituation::make(const FieldInvariants& inv, mpz_class ell, bool splits_in_K) {
  if (!is_prime(ell)) throw DomainError("ell = " + ell.get_str() + " is not prime");
  if (inv.d == 1 && splits_in_K)
    throw DomainError("splits_in_K must be false for d = 1 (Q has one place above ell)");
  const bool divides = mpz_divisible_p(inv.disc.get_mpz_t(), ell.get_mpz_t()) != 0;
  return PrimeSituation{std::move(ell), divides, splits_in_K};
}

namespace {

void check_family(unsigned n, std::uint64_t ell0) {
  if (n == 0) throw DomainError("family: dimension n must be at least 1");
  if (!is_prime(ell0)) throw DomainError("family: ell0 = " + std::to_string(ell0) + " is not prime");
}

}  // namespace

RepFamilyParams RepFamilyParams::bullet(unsigned n, std::uint64_t ell0, unsigned r, unsigned w,
                                        bool cyclotomic) {
  check_family(n, ell0);
  return RepFamilyParams{n, ell0, r, Variant::Bullet, w, 0, cyclotomic};
}

RepFamilyParams RepFamilyParams::circle(unsigned n, std::uint64_t ell0, unsigned r, unsigned w_bar,
                                        bool cyclotomic) {
  check_family(n, ell0);
  return RepFamilyParams{n, ell0, r, Variant::Circle, 0, w_bar, cyclotomic};
}

unsigned RepFamilyParams::weight_budget() const {
  return variant == Variant::Bullet ? n * w : w_bar;
}

mpz_class central_binomial(unsigned n) {
  if (n == 0) throw DomainError("central_binomial: n must be at least 1");
  return binomial(n, n % 2 == 0 ? n / 2 : (n - 1) / 2);
}

mpz_class scaled_threshold(unsigned n, std::uint64_t ell0, const mpq_class& exponent) {
  mpz_class e;
  mpz_cdiv_q(e.get_mpz_t(), exponent.get_num_mpz_t(), exponent.get_den_mpz_t());
  return 2 * central_binomial(n) * pow(ell0, e.get_ui());
}

DerivedConstants derived_constants(const FieldInvariants& inv, const RepFamilyParams& p) {
  DerivedConstants k;
  const mpq_class nr(p.n * p.r);
  const mpq_class half_budget(p.weight_budget(), 2);
  k.M = std::max(nr, half_budget);
  k.M.canonicalize();
  k.c_n = central_binomial(p.n);
  k.eps1 = inv.d * k.M;
  k.eps2 = inv.d * k.eps1;
  k.eps1p = inv.d * inv.h_plus * k.M;
  k.eps2p = inv.d * k.eps1p;
  k.C1 = scaled_threshold(p.n, p.ell0, k.eps1);
  k.C2 = scaled_threshold(p.n, p.ell0, k.eps2);
  k.C1p = scaled_threshold(p.n, p.ell0, k.eps1p);
  k.C2p = scaled_threshold(p.n, p.ell0, k.eps2p);
  return k;
}

std::string_view to_string(Conclusion c) {
  return c == Conclusion::Empty ? "Empty" : "NotDecided";
}

std::string_view to_string(Theorem t) {
  switch (t) {
    case Theorem::Cor1: return "Cor1";
    case Theorem::Cor2: return "Cor2";
    case Theorem::Trivial: return "Trivial";
    case Theorem::RTst: return "RTst";
    case Theorem::GRTst: return "GRTst";
    case Theorem::Ell: return "Ell";
    case Theorem::Et: return "Et";
  }
  return "?";
}

std::string_view to_string(Situation s) {
  switch (s) {
    case Situation::A: return "a";
    case Situation::B: return "b";
    case Situation::C: return "c";
    case Situation::D: return "d";
    case Situation::E: return "e";
    case Situation::Trivial: return "trivial";
    case Situation::None: return "none";
  }
  return "?";
}

std::string_view to_string(Obstruction o) {
  switch (o) {
    case Obstruction::None: return "None";
    case Obstruction::NonIntegral: return "NonIntegral";
    case Obstruction::RangeExceeded: return "RangeExceeded";
    case Obstruction::DivisibilityFails: return "DivisibilityFails";
  }
  return "?";
}

Obstruction parity_obstruction(unsigned e, unsigned w, unsigned r, unsigned n) {
  if (e == 0) throw DomainError("parity_obstruction: ramification index must be at least 1");
  if ((e * w) % 2 != 0) return Obstruction::NonIntegral;
  if (w > 2 * r) return Obstruction::RangeExceeded;
  // n*e*w/2 divisible by e  <=>  n*w/2 integral
  if ((n * w) % 2 != 0) return Obstruction::DivisibilityFails;
  return Obstruction::None;
}

namespace {

struct Hypothesis {
  std::string text;
  bool holds;
  bool involves_ell;
};

struct Candidate {
  Situation situation;
  std::vector<Hypothesis> hypotheses;
  mpz_class threshold;
  std::string threshold_label;
  std::vector<unsigned> obstruction_indices;  // ramification indices probed on Empty
};

struct ObstructionContext {
  unsigned w, r, n;
};

Verdict resolve(Theorem theorem, const std::vector<Hypothesis>& standing,
                const std::vector<Candidate>& candidates, const mpz_class& ell,
                std::optional<ObstructionContext> obstruction = std::nullopt) {
  auto all_hold = [](const std::vector<Hypothesis>& hs, bool ell_free_only) {
    return std::all_of(hs.begin(), hs.end(), [&](const Hypothesis& h) {
      return h.holds || (ell_free_only && h.involves_ell);
    });
  };
  auto comparison = [&](const Candidate& c) {
    const std::string value = c.threshold.get_str();
    const std::string text = c.threshold_label == value ? value : c.threshold_label + " = " + value;
    return Hypothesis{"ell > " + text, ell > c.threshold, true};
  };

  const bool standing_ok = all_hold(standing, false);
  const bool standing_ell_free = all_hold(standing, true);

  Verdict v{Conclusion::NotDecided, theorem, Situation::None, 0, {}, {}};
  const Candidate* cited = nullptr;
  for (const auto& c : candidates) {
    const bool applicable = standing_ell_free && all_hold(c.hypotheses, true);
    const bool fired = standing_ok && all_hold(c.hypotheses, false) && ell > c.threshold;
    v.situations.push_back({c.situation, c.threshold, applicable, fired});
    if (fired && cited == nullptr) cited = &c;
  }

  for (const auto& h : standing) v.trace.push_back({"standing", h.text, h.holds});
  auto scope_of = [](const Candidate& c) { return std::string(to_string(c.situation)); };

  if (cited != nullptr) {
    v.conclusion = Conclusion::Empty;
    v.situation = cited->situation;
    v.threshold = cited->threshold;
    for (const auto& h : cited->hypotheses) v.trace.push_back({scope_of(*cited), h.text, h.holds});
    v.trace.push_back({scope_of(*cited), comparison(*cited).text, true});
    if (obstruction) {
      for (unsigned e : cited->obstruction_indices) {
        const auto o = parity_obstruction(e, obstruction->w, obstruction->r, obstruction->n);
        if (o == Obstruction::None)
          throw InternalConsistencyError("situation " + scope_of(*cited) +
                                         " fired without a contradiction at e = " + std::to_string(e));
        v.trace.push_back({scope_of(*cited),
                           "contradiction at e=" + std::to_string(e) + ": " + std::string(to_string(o)),
                           true});
      }
    }
    return v;
  }

  bool any = false;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    const auto& c = candidates[i];
    for (const auto& h : c.hypotheses) v.trace.push_back({scope_of(c), h.text, h.holds});
    const auto cmp = comparison(c);
    v.trace.push_back({scope_of(c), cmp.text, cmp.holds});
    if (v.situations[i].applicable && (!any || c.threshold < v.threshold)) {
      v.threshold = c.threshold;
      any = true;
    }
  }
  return v;
}

Hypothesis not_dividing_disc(const PrimeSituation& ps) {
  return {"ell does not divide d_K", !ps.divides_disc, true};
}

Hypothesis odd_degree(const FieldInvariants& inv) {
  return {"[K:Q] odd", inv.d % 2 == 1, false};
}

Hypothesis not_split(const PrimeSituation& ps) {
  return {"ell does not split in K", !ps.splits_in_K, false};
}

Hypothesis distinct_from(const mpz_class& ell, std::uint64_t other, const char* name) {
  return {std::string("ell != ") + name + " = " + std::to_string(other), ell != pow(other, 1), true};
}

Verdict decide_main(Theorem theorem, const FieldInvariants& inv, const RepFamilyParams& p,
                    const PrimeSituation& ps) {
  if (p.variant != Variant::Bullet)
    throw DomainError(std::string(to_string(theorem)) + " needs a bullet family (n, ell0, r, w)");
  if (ps.ell == pow(p.ell0, 1))
    throw EllEqualsEll0("ell = ell0 = " + ps.ell.get_str() + " lies outside the framework");

  const bool primed = theorem == Theorem::Cor2;
  const DerivedConstants k = derived_constants(inv, p);
  const mpz_class& first = primed ? k.C1p : k.C1;
  const mpz_class& second = primed ? k.C2p : k.C2;
  const std::string first_name = primed ? "C1'" : "C1";
  const std::string second_name = primed ? "C2'" : "C2";

  const Hypothesis w_odd{"w odd", p.w % 2 == 1, false};
  const Hypothesis w_large{"w > 2r", p.w > 2 * p.r, false};
  const Hypothesis n_odd{"n odd", p.n % 2 == 1, false};

  std::vector<Hypothesis> standing{{"w odd or w > 2r", w_odd.holds || w_large.holds, false}};
  if (primed) standing.push_back(not_split(ps));

  std::vector<Candidate> candidates{
      {Situation::A, {w_odd, not_dividing_disc(ps)}, first, first_name, {1}},
      {Situation::B, {w_odd, odd_degree(inv)}, second, second_name, {1}},
      {Situation::C, {w_large, not_dividing_disc(ps)}, first, first_name, {1}},
      {Situation::D, {w_large}, second, second_name, {1}},
      {Situation::E, {w_odd, n_odd}, second, second_name, {1, 2}},
  };
  return resolve(theorem, standing, candidates, ps.ell, ObstructionContext{p.w, p.r, p.n});
}

}  // namespace

Verdict decide_cor1(const FieldInvariants& inv, const RepFamilyParams& p, const PrimeSituation& ps) {
  if (!p.cyclotomic) throw DomainError("Cor1 applies to the cyclotomic family only (cyclotomic = true)");
  return decide_main(Theorem::Cor1, inv, p, ps);
}

Verdict decide_cor2(const FieldInvariants& inv, const RepFamilyParams& p, const PrimeSituation& ps) {
  return decide_main(Theorem::Cor2, inv, p, ps);
}

Verdict decide_trivial(const FieldInvariants& inv, const RepFamilyParams& p, const mpz_class& ell) {
  if (p.variant != Variant::Bullet) throw DomainError("Trivial needs a bullet family (n, ell0, r, w)");
  std::vector<Candidate> candidates{{Situation::Trivial,
                                     {{"n odd", p.n % 2 == 1, false},
                                      {"w odd", p.w % 2 == 1, false},
                                      {"K/Q Galois of odd degree", inv.galois_odd_degree, false},
                                      distinct_from(ell, p.ell0, "ell0")},
                                     0,
                                     "0",
                                     {}}};
  return resolve(Theorem::Trivial, {}, candidates, ell);
}

Verdict decide_rt(const FieldInvariants& inv, unsigned g, const PrimeSituation& ps, RtVariant variant,
                  std::uint64_t ell0) {
  if (g == 0) throw DomainError("rt: abelian variety dimension g must be at least 1");
  const mpz_class central = binomial(2 * g, g);
  const unsigned long d = inv.d;
  if (variant == RtVariant::St) {
    const unsigned long delta1 = 2 * d * g + 1;
    const unsigned long delta2 = 2 * d * d * g + 1;
    std::vector<Candidate> candidates{
        {Situation::A, {not_dividing_disc(ps)}, pow(2, delta1) * central,
         "2^delta1*binom(2g,g) with delta1 = " + std::to_string(delta1), {}},
        {Situation::B, {odd_degree(inv)}, pow(2, delta2) * central,
         "2^delta2*binom(2g,g) with delta2 = " + std::to_string(delta2), {}},
    };
    return resolve(Theorem::RTst, {}, candidates, ps.ell);
  }
  if (!is_prime(ell0)) throw DomainError("rt: ell0 = " + std::to_string(ell0) + " is not prime");
  const unsigned long h = inv.h_plus;
  const unsigned long delta1 = 2 * d * g * h;
  const unsigned long delta2 = 2 * d * d * g * h;
  std::vector<Hypothesis> standing{not_split(ps), distinct_from(ps.ell, ell0, "ell0")};
  std::vector<Candidate> candidates{
      {Situation::A, {not_dividing_disc(ps)}, 2 * pow(ell0, delta1) * central,
       "2*ell0^delta1'*binom(2g,g) with delta1' = " + std::to_string(delta1), {}},
      {Situation::B, {odd_degree(inv)}, 2 * pow(ell0, delta2) * central,
       "2*ell0^delta2'*binom(2g,g) with delta2' = " + std::to_string(delta2), {}},
  };
  return resolve(Theorem::GRTst, standing, candidates, ps.ell);
}

Verdict decide_ec_irred(const FieldInvariants& inv, std::uint64_t ell_E, const PrimeSituation& ps) {
  if (!is_prime(ell_E)) throw DomainError("ec-irred: ell_E = " + std::to_string(ell_E) + " is not prime");
  const unsigned long d = inv.d, h = inv.h_plus;
  const unsigned long delta1 = 2 * d * h;
  const unsigned long delta2 = 2 * d * d * h;
  std::vector<Candidate> candidates{
      {Situation::A, {not_dividing_disc(ps)}, 4 * pow(ell_E, delta1),
       "4*ell_E^delta1'' with delta1'' = " + std::to_string(delta1), {}},
      {Situation::B, {odd_degree(inv)}, 4 * pow(ell_E, delta2),
       "4*ell_E^delta2'' with delta2'' = " + std::to_string(delta2), {}},
  };
  return resolve(Theorem::Ell, {not_split(ps)}, candidates, ps.ell);
}

Verdict decide_etale(const FieldInvariants& inv, unsigned b_w, std::uint64_t ell_X, unsigned w,
                     const PrimeSituation& ps) {
  if (w % 2 == 0) throw WEven("etale: w = " + std::to_string(w) + " must be odd");
  if (b_w == 0) throw DomainError("etale: Betti number b_w must be at least 1");
  if (!is_prime(ell_X)) throw DomainError("etale: ell_X = " + std::to_string(ell_X) + " is not prime");
  const unsigned long d = inv.d, h = inv.h_plus;
  const unsigned long big_delta1 = static_cast<unsigned long>(b_w) * d * h * w;
  const unsigned long big_delta2 = static_cast<unsigned long>(b_w) * d * d * h * w;
  const mpz_class scale = 2 * central_binomial(b_w);
  std::vector<Candidate> candidates{
      {Situation::A, {not_dividing_disc(ps)}, scale * pow(ell_X, big_delta1),
       "2*c_bw*ell_X^Delta1 with Delta1 = " + std::to_string(big_delta1), {}},
      {Situation::B, {odd_degree(inv)}, scale * pow(ell_X, big_delta2),
       "2*c_bw*ell_X^Delta2 with Delta2 = " + std::to_string(big_delta2), {}},
  };
  return resolve(Theorem::Et, {not_split(ps)}, candidates, ps.ell);
}

std::optional<mpz_class> least_certified_ell(const Verdict& probe,
                                             const std::function<Verdict(const mpz_class&)>& decide) {
  std::optional<mpz_class> start;
  for (const auto& s : probe.situations)
    if (s.applicable && (!start || s.threshold < *start)) start = s.threshold;
  if (!start) return std::nullopt;
  mpz_class candidate = next_prime(*start);
  // Only finitely many primes divide d_K or equal ell0, so this terminates
  // long before the cap for any sane input.
  for (int attempt = 0; attempt < 100000; ++attempt) {
    try {
      if (decide(candidate).conclusion == Conclusion::Empty) return candidate;
    } catch (const EllEqualsEll0&) {
    }
    candidate = next_prime(candidate);
  }
  throw InternalConsistencyError("no certified prime found above " + start->get_str());
}

}  // namespace semistable
