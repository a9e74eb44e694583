#include <algorithm>
#include <exception>
#include <utility>

#include <omp.h>

#include "semistable/error.hpp"
#include "semistable/gate.hpp"
#include "semistable/primes.hpp"

namespace semistable {
namespace {

struct Corpus {
  std::vector<WeilDatum> data;
  std::vector<std::uint64_t> primes;
  unsigned d;
};

unsigned field_degree(const SearchConfig& config) {
  const auto pp = as_prime_power(config.q);
  if (!pp) throw DomainError("gate-search: q = " + std::to_string(config.q) + " is not a prime power");
  return config.d.value_or(pp->exponent);
}

void check_degrees(const SearchConfig& config) {
  if (config.seeds) return;
  if (config.degrees.empty()) throw DomainError("gate-search: no degrees requested");
  for (unsigned n : config.degrees)
    if (n != 2 && n != 4)
      throw DomainError("gate-search: degree " + std::to_string(n) + " is not an even degree <= 4");
}

std::vector<std::uint64_t> search_primes(const SearchConfig& config) {
  const auto pp = as_prime_power(config.q);
  auto primes = primes_in_range(2, config.ell_max);
  std::erase(primes, pp->prime);
  return primes;
}

// Products of weight-one Weil quadratics, one datum per product.
std::vector<WeilDatum> quadratic_products(const SearchConfig& config) {
  const auto quads = enumerate_weil_quadratics(config.q, 1);
  std::vector<WeilDatum> out;
  for (unsigned n : config.degrees) {
    std::vector<IntPolynomial> polys;
    if (n == 2) {
      polys = quads;
    } else {
      for (std::size_t i = 0; i < quads.size(); ++i)
        for (std::size_t j = i; j < quads.size(); ++j) polys.push_back(quads[i] * quads[j]);
    }
    std::sort(polys.begin(), polys.end());
    polys.erase(std::unique(polys.begin(), polys.end()), polys.end());
    for (auto& f : polys) out.push_back(make_weil_datum(std::move(f), config.q, std::vector<unsigned>(n, 1), n));
  }
  return out;
}

// Non-decreasing sequences of length n over [0, top].
std::vector<std::vector<unsigned>> t_multisets(std::size_t n, unsigned top) {
  std::vector<std::vector<unsigned>> out;
  std::vector<unsigned> cur(n, 0);
  while (true) {
    out.push_back(cur);
    std::size_t k = n;
    while (k > 0 && cur[k - 1] == top) --k;
    if (k == 0) break;
    const unsigned v = cur[k - 1] + 1;
    for (std::size_t j = k - 1; j < n; ++j) cur[j] = v;
  }
  return out;
}

std::uint64_t multiset_count(std::size_t n, unsigned top) {
  const mpz_class c = binomial(static_cast<unsigned>(top + n), static_cast<unsigned>(n));
  return c.fits_ulong_p() ? c.get_ui() : ~0ULL;
}

std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out;
  return __builtin_add_overflow(a, b, &out) ? ~0ULL : out;
}

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out;
  return __builtin_mul_overflow(a, b, &out) ? ~0ULL : out;
}

std::uint64_t count_for_degree(std::size_t n, const SearchConfig& config, std::uint64_t n_primes) {
  std::uint64_t per_poly = 0;
  for (unsigned s = 1; s <= config.s_max; ++s)
    per_poly = saturating_add(per_poly, multiset_count(n, config.r * s));
  return saturating_mul(per_poly, n_primes);
}

Corpus prepare(const SearchConfig& config) {
  check_degrees(config);
  const unsigned d = field_degree(config);
  const std::uint64_t size = corpus_size(config);
  if (size > config.budget)
    throw CorpusTooLarge("gate-search: corpus of " + std::to_string(size) + " instances exceeds budget " +
                         std::to_string(config.budget));
  Corpus corpus{config.seeds ? *config.seeds : quadratic_products(config), search_primes(config), d};
  for (const auto& datum : corpus.data)
    if (datum.q != config.q) throw DomainError("gate-search: seed has q != " + std::to_string(config.q));
  return corpus;
}

void check_postcondition(const std::vector<CongruenceInstance>& hits) {
  for (const auto& inst : hits) {
    const mpz_class bound = lemma_bound(inst);
    if (inst.ell > bound)
      throw LemmaViolation("counterexample " + inst.datum.poly.to_string() + " at ell = " +
                           inst.ell.get_str() + " lies above bound " + bound.get_str());
  }
}

}  // namespace

std::uint64_t corpus_size(const SearchConfig& config) {
  check_degrees(config);
  const std::uint64_t n_primes = search_primes(config).size();
  std::uint64_t total = 0;
  if (config.seeds) {
    for (const auto& datum : *config.seeds)
      total = saturating_add(total, count_for_degree(datum.poly.degree(), config, n_primes));
    return total;
  }
  const std::uint64_t k = enumerate_weil_quadratics(config.q, 1).size();
  for (unsigned n : config.degrees) {
    const std::uint64_t polys = n == 2 ? k : k * (k + 1) / 2;
    total = saturating_add(total, saturating_mul(polys, count_for_degree(n, config, n_primes)));
  }
  return total;
}

std::vector<CongruenceInstance> counterexample_search(const SearchConfig& config) {
  const Corpus corpus = prepare(config);

  std::vector<std::pair<std::size_t, unsigned>> shards;
  for (std::size_t i = 0; i < corpus.data.size(); ++i)
    for (unsigned s = 1; s <= config.s_max; ++s) shards.emplace_back(i, s);

  std::vector<std::vector<CongruenceInstance>> found(shards.size());
  std::exception_ptr failure;

#pragma omp parallel for schedule(dynamic)
  for (std::size_t k = 0; k < shards.size(); ++k) {
    try {
      const auto [index, s] = shards[k];
      const WeilDatum& datum = corpus.data[index];
      const IntPolynomial powered = power_transform(datum.poly, s);
      for (const auto& t : t_multisets(datum.poly.degree(), config.r * s)) {
        const IntPolynomial target = from_prime_power_roots(datum.q, t);
        // Congruent mod ell  <=>  ell divides every coefficient difference.
        mpz_class g = 0;
        for (std::size_t j = 0; j <= powered.degree(); ++j) {
          const mpz_class diff = powered[j] - target[j];
          mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), diff.get_mpz_t());
        }
        if (g == 0) continue;
        for (std::uint64_t ell : corpus.primes) {
          if (!mpz_divisible_ui_p(g.get_mpz_t(), ell)) continue;
          found[k].push_back(CongruenceInstance::make(datum, s, s, t, mpz_class(static_cast<unsigned long>(ell)),
                                                      corpus.d, config.r));
        }
      }
    } catch (...) {
#pragma omp critical(gate_search_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);

  std::vector<CongruenceInstance> hits;
  for (auto& shard : found)
    for (auto& inst : shard) hits.push_back(std::move(inst));
  std::sort(hits.begin(), hits.end());
  check_postcondition(hits);
  return hits;
}

std::vector<CongruenceInstance> counterexample_search_serial(const SearchConfig& config) {
  const Corpus corpus = prepare(config);
  std::vector<CongruenceInstance> hits;
  for (const auto& datum : corpus.data) {
    for (unsigned s = 1; s <= config.s_max; ++s) {
      for (const auto& t : t_multisets(datum.poly.degree(), config.r * s)) {
        const bool equal = power_transform(datum.poly, s) == from_prime_power_roots(datum.q, t);
        if (equal) continue;
        for (std::uint64_t ell : corpus.primes) {
          auto inst = CongruenceInstance::make(datum, s, s, t, mpz_class(static_cast<unsigned long>(ell)),
                                               corpus.d, config.r);
          if (symmetric_congruence(inst)) hits.push_back(std::move(inst));
        }
      }
    }
  }
  std::sort(hits.begin(), hits.end());
  check_postcondition(hits);
  return hits;
}

}  // namespace semistable
