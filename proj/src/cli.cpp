#include "semistable/cli.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "semistable/bounds.hpp"
#include "semistable/error.hpp"
#include "semistable/gate.hpp"
#include "semistable/intpoly.hpp"
#include "semistable/primes.hpp"
#include "semistable/tame.hpp"
#include "semistable/weil.hpp"

namespace semistable::cli {
namespace {

using json = nlohmann::json;
using ojson = nlohmann::ordered_json;

// Strict reader: every key must be asked for before finish(), anything else
// in the document is rejected.
class Reader {
 public:
  explicit Reader(const json& doc) : doc_(doc) {
    if (!doc_.is_object()) throw SchemaError("document must be a JSON object");
  }

  bool has(const std::string& key) {
    allowed_.insert(key);
    return doc_.contains(key);
  }

  std::uint64_t uint(const std::string& key) {
    require(key);
    return as_uint(key, doc_.at(key));
  }

  std::optional<std::uint64_t> opt_uint(const std::string& key) {
    if (!has(key)) return std::nullopt;
    return as_uint(key, doc_.at(key));
  }

  unsigned small(const std::string& key) { return narrow(key, uint(key)); }

  std::optional<unsigned> opt_small(const std::string& key) {
    auto v = opt_uint(key);
    if (!v) return std::nullopt;
    return narrow(key, *v);
  }

  mpz_class bigint(const std::string& key) {
    require(key);
    return as_bigint(key, doc_.at(key));
  }

  std::optional<bool> opt_bool(const std::string& key) {
    if (!has(key)) return std::nullopt;
    const json& v = doc_.at(key);
    if (!v.is_boolean()) throw SchemaError("'" + key + "' must be a boolean");
    return v.get<bool>();
  }

  std::optional<std::string> opt_string(const std::string& key) {
    if (!has(key)) return std::nullopt;
    const json& v = doc_.at(key);
    if (!v.is_string()) throw SchemaError("'" + key + "' must be a string");
    return v.get<std::string>();
  }

  std::string string(const std::string& key) {
    require(key);
    return *opt_string(key);
  }

  std::vector<unsigned> small_list(const std::string& key) {
    require(key);
    return small_list_of(key, doc_.at(key));
  }

  // Accepts a single integer or an array of them.
  std::vector<unsigned> small_or_list(const std::string& key) {
    require(key);
    const json& v = doc_.at(key);
    if (v.is_array()) return small_list_of(key, v);
    return {narrow(key, as_uint(key, v))};
  }

  std::vector<mpz_class> bigint_list(const std::string& key) {
    require(key);
    const json& v = doc_.at(key);
    if (!v.is_array()) throw SchemaError("'" + key + "' must be an array");
    std::vector<mpz_class> out;
    for (const auto& item : v) out.push_back(as_bigint(key, item));
    return out;
  }

  void finish() const {
    for (const auto& [key, value] : doc_.items())
      if (!allowed_.count(key)) throw SchemaError("unknown key '" + key + "'");
  }

 private:
  void require(const std::string& key) {
    if (!has(key)) throw SchemaError("missing required key '" + key + "'");
  }

  static std::uint64_t as_uint(const std::string& key, const json& v) {
    if (v.is_number_unsigned()) return v.get<std::uint64_t>();
    if (v.is_number_integer()) throw SchemaError("'" + key + "' must be non-negative");
    throw SchemaError("'" + key + "' must be a non-negative integer");
  }

  static unsigned narrow(const std::string& key, std::uint64_t v) {
    if (v > 0xFFFFFFFFULL) throw SchemaError("'" + key + "' is too large");
    return static_cast<unsigned>(v);
  }

  static std::vector<unsigned> small_list_of(const std::string& key, const json& v) {
    if (!v.is_array()) throw SchemaError("'" + key + "' must be an array");
    std::vector<unsigned> out;
    for (const auto& item : v) out.push_back(narrow(key, as_uint(key, item)));
    return out;
  }

  static mpz_class as_bigint(const std::string& key, const json& v) {
    if (v.is_number_unsigned()) return mpz_class(std::to_string(v.get<std::uint64_t>()));
    if (v.is_number_integer()) return mpz_class(std::to_string(v.get<std::int64_t>()));
    if (v.is_string()) {
      const auto s = v.get<std::string>();
      const std::size_t start = (!s.empty() && s[0] == '-') ? 1 : 0;
      const bool digits = s.size() > start &&
                          std::all_of(s.begin() + start, s.end(), [](char c) { return c >= '0' && c <= '9'; });
      if (digits) return mpz_class(s);
    }
    throw SchemaError("'" + key + "' must be an integer or a decimal string");
  }

  const json& doc_;
  std::set<std::string> allowed_;
};

ojson strings(const std::vector<mpz_class>& values) {
  ojson out = ojson::array();
  for (const auto& v : values) out.push_back(v.get_str());
  return out;
}

ojson poly_json(const IntPolynomial& f) { return strings(f.coefficients()); }

std::string rational(const mpq_class& q) { return q.get_str(); }

// ---------------------------------------------------------------- field

struct RawField {
  unsigned d;
  mpz_class disc;
  unsigned h_plus;
  std::optional<bool> galois_odd_degree;
};

RawField read_field(Reader& r) {
  RawField f{r.small("d"), r.bigint("disc"), r.small("h_plus"), r.opt_bool("galois_odd_degree")};
  return f;
}

// Q is Galois of degree 1, so the flag is implied there.
FieldInvariants build_field(const RawField& raw, ojson& echo) {
  bool galois = raw.galois_odd_degree.value_or(false);
  if (raw.d == 1) {
    if (raw.galois_odd_degree && !*raw.galois_odd_degree)
      throw DomainError("galois_odd_degree cannot be false for d = 1 (Q/Q is Galois of degree 1)");
    galois = true;
  }
  auto inv = FieldInvariants::make(raw.d, raw.disc, raw.h_plus, galois);
  echo["d"] = inv.d;
  echo["disc"] = inv.disc.get_str();
  echo["h_plus"] = inv.h_plus;
  echo["galois_odd_degree"] = inv.galois_odd_degree;
  return inv;
}

// ---------------------------------------------------------------- family

struct RawFamily {
  unsigned n;
  std::uint64_t ell0;
  unsigned r;
  std::optional<unsigned> w;
  std::optional<unsigned> w_bar;
  bool cyclotomic;
};

RawFamily read_family(Reader& r) {
  RawFamily f{r.small("n"), r.uint("ell0"), r.small("r"), r.opt_small("w"), r.opt_small("w_bar"),
              r.opt_bool("cyclotomic").value_or(false)};
  if (f.w && f.w_bar)
    throw SchemaError("supply either 'w' (bullet family) or 'w_bar' (circle family), not both; "
                      "w_bar is derived as n*w for bullet families");
  if (!f.w && !f.w_bar) throw SchemaError("missing required key 'w' or 'w_bar'");
  return f;
}

RepFamilyParams build_family(const RawFamily& raw, ojson& echo) {
  echo["n"] = raw.n;
  echo["ell0"] = raw.ell0;
  echo["r"] = raw.r;
  if (raw.w)
    echo["w"] = *raw.w;
  else
    echo["w_bar"] = *raw.w_bar;
  echo["cyclotomic"] = raw.cyclotomic;
  return raw.w ? RepFamilyParams::bullet(raw.n, raw.ell0, raw.r, *raw.w, raw.cyclotomic)
               : RepFamilyParams::circle(raw.n, raw.ell0, raw.r, *raw.w_bar, raw.cyclotomic);
}

// ---------------------------------------------------------------- primes

struct RawPrimes {
  std::vector<mpz_class> ells;
  std::optional<bool> splits;
  bool min_ell;
};

RawPrimes read_primes(Reader& r, const Flags& flags) {
  RawPrimes p;
  const bool single = r.has("ell");
  const bool many = r.has("ells");
  if (single && many) throw SchemaError("supply either 'ell' or 'ells', not both");
  if (single) p.ells.push_back(r.bigint("ell"));
  if (many) p.ells = r.bigint_list("ells");
  for (const auto& text : flags.ells) {
    mpz_class v;
    if (text.empty() || v.set_str(text, 10) != 0) throw SchemaError("--ell value '" + text + "' is not an integer");
    p.ells.push_back(v);
  }
  std::vector<mpz_class> unique;
  for (const auto& e : p.ells)
    if (std::find(unique.begin(), unique.end(), e) == unique.end()) unique.push_back(e);
  p.ells = std::move(unique);
  p.splits = r.opt_bool("splits_in_K");
  p.min_ell = r.opt_bool("min_ell").value_or(false) || flags.min_ell;
  if (p.ells.empty() && !p.min_ell) throw SchemaError("no ell supplied (use 'ell', 'ells', --ell or --min-ell)");
  return p;
}

// Resolves the splitting flag once the field is known.
bool resolve_splits(const RawPrimes& p, const FieldInvariants& inv, bool needed, ojson& echo) {
  if (needed && inv.d > 1 && !p.splits)
    throw SchemaError("'splits_in_K' is required when d > 1");
  const bool splits = p.splits.value_or(false);
  if (inv.d == 1 && splits) throw DomainError("splits_in_K must be false for d = 1 (Q has one place above ell)");
  echo["ells"] = strings(p.ells);
  if (needed || p.splits) echo["splits_in_K"] = splits;
  echo["min_ell"] = p.min_ell;
  return splits;
}

std::string_view reading(Theorem t) {
  switch (t) {
    case Theorem::Cor1: return "Rep(G_K)^bullet_cycl is empty";
    case Theorem::Cor2:
    case Theorem::Trivial: return "Rep(G_K)^bullet is empty";
    case Theorem::RTst: return "A(K,g,ell)_st is empty";
    case Theorem::GRTst: return "A(K,g,ell0,ell)_st is empty";
    case Theorem::Ell: return "E[ell] is irreducible";
    case Theorem::Et: return "H^w is not residually Borel";
  }
  return "";
}

ojson verdict_json(const Verdict& v, const mpz_class& ell) {
  ojson out;
  out["ell"] = ell.get_str();
  out["theorem"] = to_string(v.theorem);
  out["conclusion"] = to_string(v.conclusion);
  out["reading"] = v.conclusion == Conclusion::Empty ? reading(v.theorem) : "no conclusion";
  out["situation"] = to_string(v.situation);
  out["threshold"] = v.threshold.get_str();
  ojson trace = ojson::array();
  for (const auto& e : v.trace) {
    ojson entry;
    entry["scope"] = e.scope;
    entry["hypothesis"] = e.hypothesis;
    entry["holds"] = e.holds;
    trace.push_back(entry);
  }
  out["trace"] = trace;
  ojson situations = ojson::array();
  for (const auto& s : v.situations) {
    ojson entry;
    entry["situation"] = to_string(s.situation);
    entry["threshold"] = s.threshold.get_str();
    entry["applicable"] = s.applicable;
    entry["fired"] = s.fired;
    situations.push_back(entry);
  }
  out["situations"] = situations;
  if (v.theorem == Theorem::Et)
    out["notes"] = ojson::array({"the undefined constant B_{b_w} is read as the central binomial c_{b_w}"});
  return out;
}

ojson min_ell_json(const std::optional<mpz_class>& v) {
  return v ? ojson(v->get_str()) : ojson(nullptr);
}

mpz_class probe_ell(std::uint64_t avoid) { return avoid == 2 ? mpz_class(3) : mpz_class(2); }

using Decider = std::function<Verdict(const mpz_class&)>;

// Runs one decision procedure over the requested ells (and --min-ell).
ojson run_decider(const std::vector<mpz_class>& ells, bool min_ell, const Decider& decide,
                  std::uint64_t avoid, ojson& verdicts) {
  for (const auto& ell : ells) verdicts.push_back(verdict_json(decide(ell), ell));
  if (!min_ell) return nullptr;
  const Verdict probe = decide(probe_ell(avoid));
  return min_ell_json(least_certified_ell(probe, decide));
}

// ---------------------------------------------------------------- commands

struct Command {
  ojson input = ojson::object();
  ojson result = ojson::object();
};

Command cmd_constants(Reader& r) {
  const RawField field = read_field(r);
  const RawFamily family = read_family(r);
  r.finish();
  Command c;
  const auto inv = build_field(field, c.input);
  const auto p = build_family(family, c.input);
  const auto k = derived_constants(inv, p);
  c.result["w_bar"] = p.weight_budget();
  c.result["M"] = rational(k.M);
  c.result["c_n"] = k.c_n.get_str();
  c.result["eps1"] = rational(k.eps1);
  c.result["eps2"] = rational(k.eps2);
  c.result["eps1p"] = rational(k.eps1p);
  c.result["eps2p"] = rational(k.eps2p);
  c.result["C1"] = k.C1.get_str();
  c.result["C2"] = k.C2.get_str();
  c.result["C1p"] = k.C1p.get_str();
  c.result["C2p"] = k.C2p.get_str();
  return c;
}

Command cmd_decide(Reader& r, const Flags& flags) {
  const RawField field = read_field(r);
  const RawFamily family = read_family(r);
  const RawPrimes primes = read_primes(r, flags);
  r.finish();
  Command c;
  const auto inv = build_field(field, c.input);
  const auto p = build_family(family, c.input);
  const bool splits = resolve_splits(primes, inv, true, c.input);
  if (p.variant != Variant::Bullet) throw DomainError("decide needs a bullet family (supply 'w')");

  auto situate = [&](const mpz_class& ell) { return PrimeSituation::make(inv, ell, splits); };
  std::vector<std::pair<std::string, Decider>> deciders;
  deciders.emplace_back("Trivial", [&](const mpz_class& ell) {
    if (!is_prime(ell)) throw DomainError("ell = " + ell.get_str() + " is not prime");
    return decide_trivial(inv, p, ell);
  });
  if (p.cyclotomic)
    deciders.emplace_back("Cor1", [&](const mpz_class& ell) { return decide_cor1(inv, p, situate(ell)); });
  deciders.emplace_back("Cor2", [&](const mpz_class& ell) { return decide_cor2(inv, p, situate(ell)); });

  ojson verdicts = ojson::array();
  std::vector<std::string> certified;
  for (const auto& ell : primes.ells) {
    bool empty = false;
    for (const auto& [name, decide] : deciders) {
      const Verdict v = decide(ell);
      empty = empty || v.conclusion == Conclusion::Empty;
      verdicts.push_back(verdict_json(v, ell));
    }
    if (empty) certified.push_back(ell.get_str());
  }
  c.result["verdicts"] = verdicts;
  c.result["certified_empty"] = certified;
  if (primes.min_ell) {
    ojson mins = ojson::object();
    for (const auto& [name, decide] : deciders) {
      const Verdict probe = decide(probe_ell(p.ell0));
      mins[name] = min_ell_json(least_certified_ell(probe, decide));
    }
    c.result["min_ell"] = mins;
  }
  return c;
}

Command cmd_rt(Reader& r, const Flags& flags) {
  const RawField field = read_field(r);
  const unsigned g = r.small("g");
  const std::string variant_name = r.string("variant");
  const auto ell0 = r.opt_uint("ell0");
  const RawPrimes primes = read_primes(r, flags);
  r.finish();
  RtVariant variant;
  if (variant_name == "st")
    variant = RtVariant::St;
  else if (variant_name == "st_with_ell0")
    variant = RtVariant::StWithEll0;
  else
    throw SchemaError("'variant' must be \"st\" or \"st_with_ell0\"");
  if (variant == RtVariant::StWithEll0 && !ell0) throw SchemaError("variant st_with_ell0 requires 'ell0'");
  if (variant == RtVariant::St && ell0) throw SchemaError("'ell0' is only meaningful for variant st_with_ell0");

  Command c;
  const auto inv = build_field(field, c.input);
  c.input["g"] = g;
  c.input["variant"] = variant_name;
  if (ell0) c.input["ell0"] = *ell0;
  const bool splits = resolve_splits(primes, inv, variant == RtVariant::StWithEll0, c.input);
  const Decider decide = [&](const mpz_class& ell) {
    return decide_rt(inv, g, PrimeSituation::make(inv, ell, splits), variant, ell0.value_or(0));
  };
  ojson verdicts = ojson::array();
  ojson min = run_decider(primes.ells, primes.min_ell, decide, ell0.value_or(0), verdicts);
  c.result["verdicts"] = verdicts;
  if (primes.min_ell) c.result["min_ell"] = min;
  return c;
}

Command cmd_ec_irred(Reader& r, const Flags& flags) {
  const RawField field = read_field(r);
  const std::uint64_t ell_E = r.uint("ell_E");
  const RawPrimes primes = read_primes(r, flags);
  r.finish();
  Command c;
  const auto inv = build_field(field, c.input);
  c.input["ell_E"] = ell_E;
  const bool splits = resolve_splits(primes, inv, true, c.input);
  const Decider decide = [&](const mpz_class& ell) {
    return decide_ec_irred(inv, ell_E, PrimeSituation::make(inv, ell, splits));
  };
  ojson verdicts = ojson::array();
  ojson min = run_decider(primes.ells, primes.min_ell, decide, 0, verdicts);
  c.result["verdicts"] = verdicts;
  if (primes.min_ell) c.result["min_ell"] = min;
  return c;
}

Command cmd_etale(Reader& r, const Flags& flags) {
  const RawField field = read_field(r);
  const unsigned b_w = r.small("b_w");
  const std::uint64_t ell_X = r.uint("ell_X");
  const unsigned w = r.small("w");
  const RawPrimes primes = read_primes(r, flags);
  r.finish();
  Command c;
  const auto inv = build_field(field, c.input);
  c.input["b_w"] = b_w;
  c.input["ell_X"] = ell_X;
  c.input["w"] = w;
  const bool splits = resolve_splits(primes, inv, true, c.input);
  const Decider decide = [&](const mpz_class& ell) {
    return decide_etale(inv, b_w, ell_X, w, PrimeSituation::make(inv, ell, splits));
  };
  ojson verdicts = ojson::array();
  ojson min = run_decider(primes.ells, primes.min_ell, decide, 0, verdicts);
  c.result["verdicts"] = verdicts;
  if (primes.min_ell) c.result["min_ell"] = min;
  return c;
}

Command cmd_tame_weights(Reader& r) {
  const std::uint64_t ell = r.uint("ell");
  const unsigned h = r.small("h");
  const std::uint64_t n_f = r.uint("n_f");
  r.finish();
  Command c;
  c.input["ell"] = ell;
  c.input["h"] = h;
  c.input["n_f"] = n_f;
  const auto ch = TameCharacterExponent::make(ell, h, n_f);
  c.result["digits"] = digit_weights(ch).weights();
  c.result["canonical"] = canonical_exponent(ch);
  c.result["orbit"] = frobenius_orbit(ch);
  return c;
}

Command cmd_weil_check(Reader& r) {
  const std::vector<mpz_class> coeffs = r.bigint_list("poly");
  const std::uint64_t q = r.uint("q");
  const std::vector<unsigned> weights = r.small_list("weights");
  const std::string tol_text = r.opt_string("tolerance").value_or("1/1000000");
  r.finish();
  mpq_class tol;
  if (tol.set_str(tol_text, 10) != 0 || tol.get_den() == 0)
    throw SchemaError("'tolerance' must be a rational string such as \"1/1000000\"");
  tol.canonicalize();
  Command c;
  const IntPolynomial f(coeffs);
  c.input["poly"] = poly_json(f);
  c.input["q"] = q;
  c.input["weights"] = weights;
  c.input["tolerance"] = rational(tol);
  c.result["validate_weights"] = validate_weights(f, q, weights, tol.get_d());
  const bool uniform =
      !weights.empty() && std::all_of(weights.begin(), weights.end(), [&](unsigned w) { return w == weights[0]; });
  if (uniform) {
    c.result["uniform_weight"] = weights[0];
    c.result["functional_equation"] = functional_equation_check(f, q, weights[0]);
  } else {
    c.result["uniform_weight"] = nullptr;
    c.result["functional_equation"] = nullptr;
  }
  return c;
}

Command cmd_power_transform(Reader& r) {
  const std::vector<mpz_class> coeffs = r.bigint_list("poly");
  const unsigned s = r.small("s");
  r.finish();
  Command c;
  const IntPolynomial f(coeffs);
  c.input["poly"] = poly_json(f);
  c.input["s"] = s;
  const IntPolynomial g = power_transform(f, s);
  c.result["poly"] = poly_json(g);
  c.result["display"] = g.to_string();
  return c;
}

Command cmd_gate(Reader& r) {
  const std::vector<mpz_class> coeffs = r.bigint_list("poly");
  const std::uint64_t q = r.uint("q");
  const std::vector<unsigned> weights = r.small_list("weights");
  const unsigned w_bar = r.small("w_bar");
  const unsigned s = r.small("s");
  const unsigned u = r.small("u");
  const std::vector<unsigned> t = r.small_list("t");
  const mpz_class ell = r.bigint("ell");
  const unsigned d = r.small("d");
  const unsigned rr = r.small("r");
  r.finish();
  Command c;
  IntPolynomial f(coeffs);
  c.input["poly"] = poly_json(f);
  c.input["q"] = q;
  c.input["weights"] = weights;
  c.input["w_bar"] = w_bar;
  c.input["s"] = s;
  c.input["u"] = u;
  c.input["t"] = t;
  c.input["ell"] = ell.get_str();
  c.input["d"] = d;
  c.input["r"] = rr;
  auto datum = make_weil_datum(std::move(f), q, weights, w_bar);
  const auto inst = CongruenceInstance::make(std::move(datum), s, u, t, ell, d, rr);
  const GateVerdict v = forced_equality(inst);
  c.result["outcome"] = to_string(v.outcome);
  c.result["congruent"] = v.congruent;
  c.result["bound"] = v.bound.get_str();
  c.result["power_transform"] = poly_json(power_transform(inst.datum.poly, s));
  c.result["target"] = poly_json(from_prime_power_roots(q, inst.t));
  if (v.outcome == GateOutcome::ForcedEqual) c.result["matched"] = v.matched;
  return c;
}

Command cmd_gate_search(Reader& r, const Flags& flags) {
  SearchConfig config;
  config.q = r.uint("q");
  config.degrees = r.small_or_list("n");
  config.s_max = r.small("s_max");
  config.ell_max = r.uint("ell_max");
  config.r = r.opt_small("r").value_or(1);
  config.d = r.opt_small("d");
  config.budget = r.opt_uint("budget").value_or(config.budget);
  r.finish();
  if (flags.budget) config.budget = *flags.budget;
  const auto pp = as_prime_power(config.q);
  if (!pp) throw DomainError("gate-search: q = " + std::to_string(config.q) + " is not a prime power");
  const unsigned d = config.d.value_or(pp->exponent);

  Command c;
  c.input["q"] = config.q;
  c.input["n"] = config.degrees;
  c.input["s_max"] = config.s_max;
  c.input["ell_max"] = config.ell_max;
  c.input["r"] = config.r;
  c.input["d"] = d;
  c.input["budget"] = config.budget;

  c.result["corpus_size"] = corpus_size(config);
  const auto hits = counterexample_search(config);

  ojson bounds = ojson::array();
  for (unsigned n : config.degrees) {
    for (unsigned s = 1; s <= config.s_max; ++s) {
      ojson b;
      b["n"] = n;
      b["u"] = s;
      const mpq_class M = std::max(mpq_class(n * config.r), mpq_class(n, 2));
      b["bound"] = lemma_bound(n, pp->prime, d, M, s).get_str();
      bounds.push_back(b);
    }
  }
  c.result["bounds"] = bounds;
  ojson list = ojson::array();
  for (const auto& inst : hits) {
    ojson h;
    h["poly"] = poly_json(inst.datum.poly);
    h["s"] = inst.s;
    h["u"] = inst.u;
    h["t"] = inst.t;
    h["ell"] = inst.ell.get_str();
    h["bound"] = lemma_bound(inst).get_str();
    list.push_back(h);
  }
  c.result["hit_count"] = hits.size();
  c.result["hits"] = list;
  c.result["hits_above_bound"] = 0;
  return c;
}

using Handler = std::function<Command(Reader&, const Flags&)>;

const std::map<std::string, Handler, std::less<>>& handlers() {
  static const std::map<std::string, Handler, std::less<>> table{
      {"constants", [](Reader& r, const Flags&) { return cmd_constants(r); }},
      {"decide", cmd_decide},
      {"rt", cmd_rt},
      {"ec-irred", cmd_ec_irred},
      {"etale", cmd_etale},
      {"tame-weights", [](Reader& r, const Flags&) { return cmd_tame_weights(r); }},
      {"weil-check", [](Reader& r, const Flags&) { return cmd_weil_check(r); }},
      {"power-transform", [](Reader& r, const Flags&) { return cmd_power_transform(r); }},
      {"gate", [](Reader& r, const Flags&) { return cmd_gate(r); }},
      {"gate-search", cmd_gate_search},
  };
  return table;
}

}  // namespace

std::vector<std::string_view> commands() {
  std::vector<std::string_view> out;
  for (const auto& [name, handler] : handlers()) out.push_back(name);
  return out;
}

ojson certify(std::string_view command, const json& document, const Flags& flags) {
  const auto it = handlers().find(command);
  if (it == handlers().end()) throw SchemaError("unknown command '" + std::string(command) + "'");
  Reader reader(document);
  Command c = it->second(reader, flags);
  ojson cert;
  cert["tool"] = kToolName;
  cert["version"] = kToolVersion;
  cert["command"] = command;
  cert["input"] = std::move(c.input);
  cert["result"] = std::move(c.result);
  return cert;
}

Outcome run(std::string_view command, std::string_view document_text, const Flags& flags) {
  try {
    const json doc = json::parse(document_text);
    const ojson cert = certify(command, doc, flags);
    return {kExitOk, (flags.compact ? cert.dump() : cert.dump(2)) + "\n", ""};
  } catch (const json::parse_error& e) {
    return {kExitSchema, "", std::string("schema error: malformed JSON: ") + e.what() + "\n"};
  } catch (const SchemaError& e) {
    return {kExitSchema, "", std::string("schema error: ") + e.what() + "\n"};
  } catch (const InternalConsistencyError& e) {
    return {kExitInternal, "", std::string("internal consistency failure: ") + e.what() + "\n"};
  } catch (const DomainError& e) {
    return {kExitPrecondition, "", std::string("precondition failed: ") + e.what() + "\n"};
  } catch (const std::exception& e) {
    return {kExitInternal, "", std::string("internal error: ") + e.what() + "\n"};
  }
}

}  // namespace semistable::cli
