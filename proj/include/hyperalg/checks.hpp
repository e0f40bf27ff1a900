#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "hyperalg/commutation.hpp"
#include "hyperalg/exponent_table.hpp"
#include "hyperalg/generators.hpp"
#include "hyperalg/hasse.hpp"
#include "hyperalg/subspace.hpp"

#ifndef HYPERALG_ENGINE_HASH
#define HYPERALG_ENGINE_HASH "unknown"
#endif

namespace hyperalg {

inline constexpr const char* kVersion = "hyperalg 1.0.0+" HYPERALG_ENGINE_HASH;

/// Invalid or out-of-envelope configuration.
struct ConfigError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

inline const std::vector<std::string>& check_ids() {
  static const std::vector<std::string> ids = {
      "prop3.2-shape",    "prop4.6-equality", "prop4.7-membership",     "prop4.8-generates",
      "prop4.9-g2",       "thm4.11-basis",    "thm4.11-minimal",        "thm4.13-minus",
      "prop4.14-torus",   "thm4.16/17-triangular", "g2-closed-forms", "root-lemmas"};
  return ids;
}

struct CheckConfig {
  std::string check;
  char letter = 'A';
  int rank = 2;
  int p = 2;
  int r = 1;
  std::optional<std::vector<int>> word;
  std::uint64_t budget = budget_from_env();
  /// Random (monomial, generator) pairs or window samples, depending on the check.
  std::uint64_t samples = 10000;
  int max_exp = 4;
  std::uint64_t seed = 1;

  std::string type_name() const { return std::string(1, letter) + std::to_string(rank); }

  nlohmann::ordered_json to_json() const {
    nlohmann::ordered_json j;
    j["check"] = check;
    j["type"] = std::string(1, letter);
    j["rank"] = rank;
    j["p"] = p;
    j["r"] = r;
    j["word"] = word ? nlohmann::ordered_json(*word) : nlohmann::ordered_json(nullptr);
    j["budget"] = budget;
    j["samples"] = samples;
    j["max_exp"] = max_exp;
    j["seed"] = seed;
    return j;
  }

  /// Keys missing from j keep their current values.
  void merge(const nlohmann::json& j) {
    if (j.contains("check")) check = j["check"].get<std::string>();
    if (j.contains("type")) {
      const auto t = j["type"].get<std::string>();
      if (t.empty()) throw ConfigError("empty type");
      letter = t[0];
      if (t.size() > 1) rank = std::stoi(t.substr(1));
    }
    if (j.contains("rank")) rank = j["rank"].get<int>();
    if (j.contains("p")) p = j["p"].get<int>();
    if (j.contains("r")) r = j["r"].get<int>();
    if (j.contains("word")) {
      if (j["word"].is_null()) word.reset();
      else word = j["word"].get<std::vector<int>>();
    }
    if (j.contains("budget")) budget = j["budget"].get<std::uint64_t>();
    if (j.contains("samples")) samples = j["samples"].get<std::uint64_t>();
    if (j.contains("max_exp")) max_exp = j["max_exp"].get<int>();
    if (j.contains("seed")) seed = j["seed"].get<std::uint64_t>();
  }
};

struct Assertion {
  std::string name;
  nlohmann::ordered_json expected;
  std::string provenance;
  nlohmann::ordered_json actual;
  bool ok = false;
};

struct VerificationReport {
  CheckConfig config;
  std::vector<Assertion> assertions;
  /// Empty, "budget" or "config".
  std::string reason;
  std::string detail;
  double wall_ms = 0;

  bool pass() const {
    if (!reason.empty() || assertions.empty()) return false;
    return std::all_of(assertions.begin(), assertions.end(), [](const Assertion& a) { return a.ok; });
  }
  /// 0 pass, 1 mathematical failure, 2 budget or configuration failure.
  int exit_code() const { return !reason.empty() ? 2 : pass() ? 0 : 1; }

  void add(std::string name, nlohmann::ordered_json expected, std::string provenance, nlohmann::ordered_json actual) {
    const bool ok = expected == actual;
    assertions.push_back({std::move(name), std::move(expected), std::move(provenance), std::move(actual), ok});
  }

  nlohmann::ordered_json to_json(bool with_timing = true) const {
    nlohmann::ordered_json j;
    j["config"] = config.to_json();
    j["pass"] = pass();
    j["reason"] = reason.empty() ? nlohmann::ordered_json(nullptr) : nlohmann::ordered_json(reason);
    if (!detail.empty()) j["detail"] = detail;
    j["assertions"] = nlohmann::ordered_json::array();
    for (const auto& a : assertions)
      j["assertions"].push_back({{"name", a.name},
                                 {"expected", a.expected},
                                 {"expected_provenance", a.provenance},
                                 {"actual", a.actual},
                                 {"ok", a.ok}});
    j["wall_ms"] = with_timing ? nlohmann::ordered_json(wall_ms) : nlohmann::ordered_json(nullptr);
    j["version"] = kVersion;
    return j;
  }
};

/// Frozen expected values with provenance strings, keyed by section and case.
class Expectations {
 public:
  Expectations() = default;
  explicit Expectations(nlohmann::json doc) : doc_(std::move(doc)) {}

  static Expectations load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open expectations file " + path);
    return Expectations(nlohmann::json::parse(in));
  }

  const nlohmann::json* find(const std::string& section, const std::string& key) const {
    if (!doc_.contains(section) || !doc_[section].contains(key)) return nullptr;
    return &doc_[section][key];
  }

  std::string provenance(const std::string& key, const std::string& fallback) const {
    const auto* p = find("provenance", key);
    return p ? p->get<std::string>() : fallback;
  }

 private:
  nlohmann::json doc_ = nlohmann::json::object();
};

namespace detail {

inline std::string case_key(char letter, int rank, int p) {
  return std::string(1, letter) + std::to_string(rank) + " p=" + std::to_string(p);
}

inline std::string dim_key(Mode mode, char letter, int rank, int p, int r) {
  return std::string(mode_name(mode)) + " " + case_key(letter, rank, p) + " r=" + std::to_string(r);
}

inline std::uint64_t to_u64(const BigInt& v) {
  if (v > BigInt(std::numeric_limits<std::uint64_t>::max())) throw ConfigError("dimension does not fit 64 bits");
  return static_cast<std::uint64_t>(v);
}

/// prod over positive roots of p^(a_alpha)
inline BigInt table_dimension(const ExponentTable& t) {
  BigInt d = 1;
  for (int a : t.a_map)
    for (int k = 0; k < a; ++k) d *= t.p;
  return d;
}

inline BigInt big_pow(int p, int k) {
  BigInt d = 1;
  for (int i = 0; i < k; ++i) d *= p;
  return d;
}

struct Ambient {
  std::shared_ptr<const PbwLayout> layout;
  Algebra<PrimeField> alg;
  AmbientBox box;

  Ambient(const CheckConfig& cfg, Mode mode, int r)
      : layout(make_layout(cfg.letter, cfg.rank, mode, cfg.word)),
        alg(layout, PrimeField(static_cast<std::uint32_t>(cfg.p))),
        box(layout, static_cast<std::uint32_t>(cfg.p), r) {}
};

inline ClosureOptions options(const CheckConfig& cfg) {
  ClosureOptions o;
  o.budget = cfg.budget;
  return o;
}

/// Records a budget failure when the closure skipped components.
inline bool complete(VerificationReport& rep, const ClosureResult& res, const std::string& what) {
  if (!res.partial()) return true;
  rep.reason = "budget";
  rep.detail = what + ": " + std::to_string(res.skipped.size()) + " weight components above the budget";
  return false;
}

inline std::uint64_t count_contained(const GradedSubspace& V, const Algebra<PrimeField>& alg,
                                     const std::vector<Monomial>& monos) {
  std::uint64_t n = 0;
  for (const auto& m : monos) n += V.contains(alg.monomial(m)) ? 1 : 0;
  return n;
}

inline std::vector<Monomial> box_monomials(const AmbientBox& box) {
  std::vector<Monomial> out;
  box.for_each_monomial([&](const Monomial& m) { out.push_back(m); });
  return out;
}

inline void expect_dimension(VerificationReport& rep, const Expectations& ex, const std::string& name,
                             const std::string& key, const ExponentTable& table, std::uint64_t actual) {
  const std::uint64_t formula = to_u64(table_dimension(table));
  const std::string table_prov = "product of p^a over positive roots, exponent table case (" +
                                 std::string(1, table.case_id) + ")";
  if (const auto* frozen = ex.find("dimensions", key)) {
    const auto value = frozen->at("value").get<std::uint64_t>();
    const std::string prov = frozen->value("provenance", table_prov);
    rep.add(name, value, prov, actual);
    rep.add("frozen dimension agrees with exponent table", value, table_prov, formula);
  } else {
    rep.add(name, formula, table_prov, actual);
  }
}

inline void require_plus_or_minus_envelope(const CheckConfig& cfg) {
  if (cfg.letter == 'F') throw ConfigError("F4 runs only prop4.7-membership and root-lemmas");
}

// Subalgebra generated by the simple divided powers, its dimension and the
// table basis inside it.
inline void basis_assertions(VerificationReport& rep, const CheckConfig& cfg, const Expectations& ex, Mode mode) {
  Ambient A(cfg, mode, cfg.r);
  const ExponentTable table = exponent_table(A.layout->roots(), cfg.p, cfg.r);
  const GeneratorSet gens = standard_generators(A.alg, cfg.r);
  const auto res = span_closure(A.alg, gens, A.box, options(cfg));
  if (!complete(rep, res, "closure")) return;
  const std::string side = mode == Mode::kPlus ? "+" : "-";
  expect_dimension(rep, ex, "dim V^" + side, dim_key(mode, cfg.letter, cfg.rank, cfg.p, cfg.r), table,
                   res.dimension());
  const auto basis = table_basis(A.layout, table);
  rep.add("table basis monomials contained", static_cast<std::uint64_t>(basis.size()),
          "monomials with exponents below p^a", count_contained(*res.space, A.alg, basis));
  rep.add("table basis size equals closure dimension", res.dimension(), "closure dimension",
          static_cast<std::uint64_t>(basis.size()));
  const auto st = check_left_stable(A.alg, res, gens, cfg.samples, cfg.seed);
  rep.add("left multiplication by generators stays inside", true,
          "right closure is a subalgebra (" + std::to_string(st.checked) + " pairs)", st.stable);
}

inline void generation_assertions(VerificationReport& rep, const CheckConfig& cfg, Mode mode, bool minimality) {
  Ambient A(cfg, mode, cfg.r);
  const ExponentTable table = exponent_table(A.layout->roots(), cfg.p, cfg.r);
  const GeneratorSet gens = standard_generators(A.alg, cfg.r, &table);
  const auto gen = check_generates(A.alg, gens, A.box, options(cfg));
  if (gen.partial) {
    rep.reason = "budget";
    rep.detail = "generation closure skipped components";
    return;
  }
  rep.add("closure of generators with Theta fills the box", to_u64(gen.box_dim), "p^(r nu), all bounded monomials",
          gen.dim);
  if (!minimality) return;
  const auto mr = check_minimal(A.alg, gens, A.box, options(cfg));
  if (mr.partial) {
    rep.reason = "budget";
    rep.detail = "minimality probe skipped components";
    return;
  }
  for (const auto& probe : mr.probes)
    rep.add(probe.label + " not generated by the others", false, "minimal generating set", probe.redundant);
}

inline bool hasse_rule(const RootSystem& rs, const HasseData& hd, int id) {
  return hd.in_c0(id) || rs.root(id).is_short();
}

inline void frozen_memberships(VerificationReport& rep, const Expectations& ex, const std::string& key,
                               const RootSystem& rs, const std::vector<bool>& measured, int n) {
  const auto* entry = ex.find("memberships", key);
  if (!entry) return;
  const std::string prov = entry->value("provenance", std::string("frozen membership list"));
  for (const char* side : {"in", "out"}) {
    if (!entry->contains(side)) continue;
    for (const auto& label : entry->at(side)) {
      int id = -1;
      for (int k = 0; k < rs.num_positive(); ++k)
        if (coords_label(rs.root(k).coords) == label.get<std::string>()) id = k;
      if (id < 0) throw ConfigError("expectations name an unknown root " + label.get<std::string>());
      rep.add("frozen: e[" + label.get<std::string>() + "]^(" + std::to_string(n) + ") " + side, std::string(side) == "in",
              prov, static_cast<bool>(measured[static_cast<std::size_t>(id)]));
    }
  }
}

// Membership of e_alpha^(p^(r-1)) for every positive root, plus containment
// of the level r-1 box when r >= 2.
inline void membership_assertions(VerificationReport& rep, const CheckConfig& cfg, const Expectations& ex,
                                  bool g2_rule) {
  Ambient A(cfg, Mode::kPlus, cfg.r);
  const RootSystem& rs = A.layout->roots();
  const HasseData hd = hasse_and_components(rs);
  const ExponentTable table = exponent_table(rs, cfg.p, cfg.r);
  const int n = ipow(cfg.p, cfg.r - 1);
  const GeneratorSet gens = lambda_plus(A.alg, cfg.r);
  ClosureOptions o = options(cfg);
  const bool graded = cfg.letter == 'F';
  if (graded) {
    std::vector<Coords> targets;
    for (int id = 0; id < rs.num_positive(); ++id) targets.push_back(RootSystem::add(Coords(rs.root(id).coords.size(), 0), rs.root(id).coords, n));
    o.weight_targets = targets;
  }
  const auto res = span_closure(A.alg, gens, A.box, o);
  if (!complete(rep, res, graded ? "graded closure" : "closure")) return;

  std::vector<bool> measured;
  for (int id = 0; id < rs.num_positive(); ++id) {
    const bool in = res.space->contains(A.alg.root_vector(id, n));
    measured.push_back(in);
    const bool expected = g2_rule ? !table.reduced(id) : hasse_rule(rs, hd, id);
    const std::string prov = g2_rule ? "exponent table: a = r exactly on the roots inside"
                                     : "inside iff in the long component of the long simple roots or short";
    rep.add(root_power_label(rs, id, n) + " in V^+", expected, prov, in);
  }
  if (!g2_rule) {
    bool agree = true;
    for (int id = 0; id < rs.num_positive(); ++id)
      agree &= hasse_rule(rs, hd, id) == !table.reduced(id);
    rep.add("membership rule agrees with exponent table", true, "lowered roots are the long roots outside C0", agree);
  }
  frozen_memberships(rep, ex, case_key(cfg.letter, cfg.rank, cfg.p), rs, measured, n);

  if (cfg.r >= 2 && !graded) {
    const AmbientBox lower(A.layout, static_cast<std::uint32_t>(cfg.p), cfg.r - 1);
    const auto monos = box_monomials(lower);
    rep.add("level r-1 box contained in V^+", static_cast<std::uint64_t>(monos.size()),
            "all monomials with exponents below p^(r-1)", count_contained(*res.space, A.alg, monos));
  }
}

// (h choose a + x) expanded in the binomial basis of h: sum_k C(a, s-k) (h choose k).
inline Element<IntegerRing> torus_rhs(Algebra<IntegerRing>& Z, int i, int q) {
  const PbwLayout& L = Z.layout();
  const int fi = L.slot_of_root(L.roots().negate(i)), ei = L.slot_of_root(i), hi = L.h_slot(i);
  Accumulator<IntegerRing> acc(Z.ring());
  for (int s = 1; s <= q - 1; ++s)
    for (int k = 0; k <= s; ++k) {
      const BigInt c = binomial(2 * s - 2 * q, s - k);
      if (c == 0) continue;
      Monomial m{};
      m[static_cast<std::size_t>(fi)] = static_cast<std::uint8_t>(q - s);
      m[static_cast<std::size_t>(hi)] = static_cast<std::uint8_t>(k);
      m[static_cast<std::size_t>(ei)] = static_cast<std::uint8_t>(q - s);
      acc.add(m, c);
    }
  return {Z.layout_ptr(), Z.ring(), acc.take()};
}

inline void torus_assertions(VerificationReport& rep, const CheckConfig& cfg) {
  const auto L = make_layout(cfg.letter, cfg.rank, Mode::kFull, cfg.word);
  const int l = L->roots().rank();
  const int q = ipow(cfg.p, cfg.r - 1);
  Algebra<IntegerRing> Z(L);
  std::vector<Element<IntegerRing>> rhs;
  for (int i = 0; i < l; ++i) {
    const auto e = Z.root_vector(i, q), f = Z.root_vector(L->roots().negate(i), q);
    const auto lhs = Z.multiply(e, f) - Z.multiply(f, e) - Z.h(i, q);
    rhs.push_back(torus_rhs(Z, i, q));
    rep.add("commutator identity for (h" + std::to_string(i + 1) + " choose " + std::to_string(q) + ")", true,
            "e^(q) f^(q) - f^(q) e^(q) - (h choose q) = sum f^(q-s) (h-2q+2s choose s) e^(q-s)", lhs == rhs.back());
  }

  Algebra<PrimeField> F(L, PrimeField(static_cast<std::uint32_t>(cfg.p)));
  if (cfg.r >= 2) {
    // every right-hand side monomial must lie in the level r-1 subalgebra
    const AmbientBox lower(L, static_cast<std::uint32_t>(cfg.p), cfg.r - 1);
    const auto res = span_closure(F, lambda_full(F, cfg.r - 1), lower, options(cfg));
    if (!complete(rep, res, "level r-1 closure")) return;
    for (int i = 0; i < l; ++i) {
      const auto x = reduce_mod_p(rhs[static_cast<std::size_t>(i)], static_cast<std::uint32_t>(cfg.p));
      bool inside = true;
      for (const auto& [m, c] : x.terms) inside &= lower.contains(m) && res.space->contains(F.monomial(m));
      rep.add("right-hand side for h" + std::to_string(i + 1) + " lies in V_(r-1)", true,
              "monomials with exponents below p^(r-1) in the level r-1 subalgebra", inside);
    }
  }

  const AmbientBox box(L, static_cast<std::uint32_t>(cfg.p), cfg.r);
  if (cfg.r == 1 || box.dimension() <= BigInt(cfg.budget)) {
    const auto res = span_closure(F, lambda_full(F, cfg.r), box, options(cfg));
    if (!complete(rep, res, "closure")) return;
    for (int i = 0; i < l; ++i)
      rep.add("(h" + std::to_string(i + 1) + " choose " + std::to_string(q) + ") in V_r", true,
              "torus of level r inside the subalgebra", res.space->contains(F.h(i, q)));
    std::vector<int> tb(static_cast<std::size_t>(L->num_slots()), 0);
    for (int i = 0; i < l; ++i) tb[static_cast<std::size_t>(L->h_slot(i))] = ipow(cfg.p, cfg.r) - 1;
    const auto torus = box_monomials(AmbientBox(L, static_cast<std::uint32_t>(cfg.p), cfg.r, tb));
    rep.add("torus basis monomials in V_r", static_cast<std::uint64_t>(torus.size()), "p^(r l) binomial monomials",
            count_contained(*res.space, F, torus));
  }
}

inline void triangular_assertions(VerificationReport& rep, const CheckConfig& cfg) {
  const auto L = make_layout(cfg.letter, cfg.rank, Mode::kFull, cfg.word);
  Algebra<PrimeField> F(L, PrimeField(static_cast<std::uint32_t>(cfg.p)));
  const ExponentTable table = exponent_table(L->roots(), cfg.p, cfg.r);
  const auto bounds = table_bounds(*L, table);
  const AmbientBox S(L, static_cast<std::uint32_t>(cfg.p), cfg.r, bounds);
  const GeneratorSet gens = lambda_full(F, cfg.r);

  bool gens_inside = true;
  for (const auto& g : gens)
    for (const auto& [m, c] : g.element.terms) gens_inside &= S.contains(m);
  rep.add("generators lie in S", true, "simple divided powers below p^r", gens_inside);

  const BigInt size = S.dimension();
  const BigInt pairs = size * static_cast<unsigned>(gens.size());
  const bool exhaustive = pairs <= BigInt(cfg.samples);
  std::uint64_t checked = 0, violations = 0;
  auto probe = [&](const Monomial& m, const Generator& g) {
    const auto x = F.monomial(m);
    for (const auto& prod : {F.multiply(x, g.element), F.multiply(g.element, x)})
      for (const auto& [t, c] : prod.terms)
        if (!S.contains(t)) {
          ++violations;
          return;
        }
  };
  if (exhaustive) {
    S.for_each_monomial([&](const Monomial& m) {
      for (const auto& g : gens) {
        probe(m, g);
        ++checked;
      }
    });
  } else {
    std::mt19937_64 rng(cfg.seed);
    std::uniform_int_distribution<std::size_t> pick_gen(0, gens.size() - 1);
    for (; checked < cfg.samples; ++checked) {
      Monomial m{};
      for (int s = 0; s < L->num_slots(); ++s)
        m[static_cast<std::size_t>(s)] =
            static_cast<std::uint8_t>(std::uniform_int_distribution<int>(0, bounds[static_cast<std::size_t>(s)])(rng));
      probe(m, gens[pick_gen(rng)]);
    }
  }
  rep.add(std::string("products with generators stay in S (") + (exhaustive ? "all " : "sampled ") +
              std::to_string(checked) + " pairs)",
          0, "S spanned by f-part x torus x e-part monomials below p^a, p^r, p^a", violations);

  if (cfg.r == 1) {
    const AmbientBox box(L, static_cast<std::uint32_t>(cfg.p), cfg.r);
    const auto res = span_closure(F, gens, box, options(cfg));
    if (!complete(rep, res, "closure")) return;
    rep.add("dim V_r equals dim S", to_u64(size), "product of minus part, torus and plus part", res.dimension());
  }
}

inline void root_lemma_assertions(VerificationReport& rep, const CheckConfig& cfg) {
  const RootSystem rs = build_root_system(cfg.letter, cfg.rank);
  const HasseData hd = hasse_and_components(rs);
  const int nu = rs.num_positive();
  auto sum = [&](int a, int b) { return rs.find(RootSystem::add(rs.root(a).coords, rs.root(b).coords)); };

  std::uint64_t bad_edges = 0;
  for (const auto& e : hd.edges) bad_edges += rs.root(e.to).height != rs.root(e.from).height + 1;
  rep.add("Hasse edges join consecutive heights", 0, "adding a simple root raises height by one", bad_edges);

  std::uint64_t bad_c0 = 0;
  for (int id = 0; id < nu; ++id) {
    bool long_support = true;
    for (int i = 0; i < rs.rank(); ++i)
      if (rs.root(id).coords[static_cast<std::size_t>(i)] != 0 && !rs.root(i).is_long()) long_support = false;
    bad_c0 += hd.in_c0(id) != long_support;
  }
  rep.add("C0 is the set of roots supported on long simple roots", 0, "long component of the long simple roots",
          bad_c0);

  if (rs.type().simply_laced()) {
    rep.add("single long component", 1, "all roots have one length", hd.long_components.size());
    return;
  }
  if (cfg.letter == 'G') return;

  std::uint64_t bad_strings = 0, bad_sums = 0, bad_outside = 0;
  for (int b = 0; b < rs.num_roots(); ++b) {
    if (!rs.root(b).is_long()) continue;
    for (int a = 0; a < rs.num_roots(); ++a) {
      auto g = rs.find(RootSystem::add(rs.root(b).coords, rs.root(a).coords, -1));
      if (!g || !rs.root(*g).is_short()) continue;
      auto b2 = rs.find(RootSystem::add(rs.root(b).coords, rs.root(a).coords, -2));
      const bool ok = rs.root(a).is_short() && b2 && rs.root(*b2).is_long() &&
                      !rs.find(RootSystem::add(rs.root(b).coords, rs.root(a).coords, -3)) &&
                      !rs.find(RootSystem::add(rs.root(b).coords, rs.root(a).coords, 1));
      bad_strings += !ok;
    }
  }
  for (int b = 0; b < rs.num_roots(); ++b)
    for (int c = 0; c < rs.num_roots(); ++c) {
      auto s = sum(b, c);
      if (s && rs.root(*s).is_long()) bad_sums += rs.root(b).is_long() != rs.root(c).is_long();
    }
  for (int b = 0; b < nu; ++b)
    for (int c = 0; c < nu; ++c) {
      auto s = sum(b, c);
      if (!s || !rs.root(*s).is_long() || hd.in_c0(*s)) continue;
      if (!hasse_rule(rs, hd, b) || !hasse_rule(rs, hd, c)) continue;
      bad_outside += !(rs.root(b).is_short() && rs.root(c).is_short());
    }
  rep.add("long minus short root strings have length two", 0, "root strings through long roots", bad_strings);
  rep.add("long sums have summands of equal length", 0, "root lengths", bad_sums);
  rep.add("long roots outside C0 from allowed summands need two short summands", 0, "Hasse components", bad_outside);

  const ExponentTable t = exponent_table(rs, 2, 1);
  std::uint64_t bad_table = 0;
  for (int id = 0; id < nu; ++id) bad_table += t.reduced(id) != (rs.root(id).is_long() && !hd.in_c0(id));
  rep.add("p=2 lowered roots are the long roots outside C0", 0, "exponent table at p=2", bad_table);
}

inline void validate(const CheckConfig& cfg) {
  const auto& ids = check_ids();
  if (std::find(ids.begin(), ids.end(), cfg.check) == ids.end()) throw ConfigError("unknown check " + cfg.check);
  if (!detail::valid_type(cfg.letter, cfg.rank)) throw ConfigError("invalid type " + cfg.type_name());
  if (!is_prime(cfg.p)) throw ConfigError("p must be prime");
  if (cfg.r < 0) throw ConfigError("r must be nonnegative");
  if (BigInt(ipow(cfg.p, std::min(cfg.r, 9))) > 256) throw ConfigError("p^r above 256");
  if (cfg.letter == 'F' && cfg.check != "root-lemmas" && !(cfg.check == "prop4.7-membership" && cfg.r == 1))
    throw ConfigError("F4 runs only prop4.7-membership at r=1 and root-lemmas");
}

}  // namespace detail

inline VerificationReport run_check(const CheckConfig& cfg, const Expectations& ex = Expectations{}) {
  VerificationReport rep;
  rep.config = cfg;
  const auto start = std::chrono::steady_clock::now();
  try {
    detail::validate(cfg);
    const std::string& id = cfg.check;
    if (id == "prop3.2-shape") {
      auto L = make_layout(cfg.letter, cfg.rank, Mode::kPlus, cfg.word);
      Algebra<IntegerRing> Z(L);
      const std::uint64_t nu = static_cast<std::uint64_t>(L->roots().num_positive());
      const std::uint64_t pairs = std::max<std::uint64_t>(1, nu * (nu - 1) / 2);
      const auto shape = check_commutator_shapes(Z, cfg.max_exp, static_cast<int>(std::max<std::uint64_t>(1, cfg.samples / pairs)),
                                                 cfg.seed);
      rep.add("support-shape violations (" + std::to_string(shape.products) + " products)",
              nlohmann::ordered_json::array(), "support bounds on commutators in the convex order",
              shape.violations);
    } else if (id == "g2-closed-forms") {
      if (cfg.letter != 'G') throw ConfigError("g2-closed-forms needs type G2");
      auto L = make_layout('G', 2, Mode::kPlus, cfg.word);
      Algebra<IntegerRing> Z(L);
      rep.add("closed-form mismatches for exponents up to " + std::to_string(cfg.max_exp),
              nlohmann::ordered_json::array(), "G2 product expansions", check_g2_closed_forms(Z, cfg.max_exp));
    } else if (id == "root-lemmas") {
      detail::root_lemma_assertions(rep, cfg);
    } else if (id == "prop4.6-equality") {
      detail::require_plus_or_minus_envelope(cfg);
      const auto table = exponent_table(build_root_system(cfg.letter, cfg.rank), cfg.p, cfg.r);
      if (table.case_id != 'a') throw ConfigError("prop4.6-equality needs a case without lowered exponents");
      detail::basis_assertions(rep, cfg, ex, Mode::kPlus);
      if (rep.reason.empty()) detail::generation_assertions(rep, cfg, Mode::kPlus, false);
    } else if (id == "prop4.7-membership") {
      if (cfg.letter != 'B' && cfg.letter != 'C' && cfg.letter != 'F') throw ConfigError("prop4.7-membership needs type B, C or F");
      if (cfg.p != 2 || cfg.r < 1) throw ConfigError("prop4.7-membership needs p=2 and r>=1");
      detail::membership_assertions(rep, cfg, ex, false);
    } else if (id == "prop4.8-generates") {
      detail::require_plus_or_minus_envelope(cfg);
      detail::generation_assertions(rep, cfg, Mode::kPlus, false);
    } else if (id == "prop4.9-g2") {
      if (cfg.letter != 'G' || (cfg.p != 2 && cfg.p != 3) || cfg.r < 1)
        throw ConfigError("prop4.9-g2 needs type G2, p in {2,3} and r>=1");
      detail::membership_assertions(rep, cfg, ex, true);
    } else if (id == "thm4.11-basis") {
      detail::require_plus_or_minus_envelope(cfg);
      detail::basis_assertions(rep, cfg, ex, Mode::kPlus);
    } else if (id == "thm4.11-minimal") {
      detail::require_plus_or_minus_envelope(cfg);
      detail::generation_assertions(rep, cfg, Mode::kPlus, true);
    } else if (id == "thm4.13-minus") {
      detail::require_plus_or_minus_envelope(cfg);
      detail::basis_assertions(rep, cfg, ex, Mode::kMinus);
      if (rep.reason.empty()) detail::generation_assertions(rep, cfg, Mode::kMinus, true);
      if (rep.reason.empty()) {
        detail::Ambient plus(cfg, Mode::kPlus, cfg.r), minus(cfg, Mode::kMinus, cfg.r);
        const auto a = span_closure(plus.alg, lambda_plus(plus.alg, cfg.r), plus.box, detail::options(cfg));
        const auto b = span_closure(minus.alg, lambda_minus(minus.alg, cfg.r), minus.box, detail::options(cfg));
        if (detail::complete(rep, a, "plus closure") && detail::complete(rep, b, "minus closure"))
          rep.add("dim V^- equals dim V^+", a.dimension(), "Chevalley involution swaps e and f", b.dimension());
      }
    } else if (id == "prop4.14-torus") {
      detail::require_plus_or_minus_envelope(cfg);
      if (cfg.r < 1) throw ConfigError("prop4.14-torus needs r>=1");
      detail::torus_assertions(rep, cfg);
    } else if (id == "thm4.16/17-triangular") {
      detail::require_plus_or_minus_envelope(cfg);
      detail::triangular_assertions(rep, cfg);
    }
  } catch (const ConfigError& e) {
    rep.reason = "config";
    rep.detail = e.what();
  } catch (const std::invalid_argument& e) {
    rep.reason = "config";
    rep.detail = e.what();
  }
  rep.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

}  // namespace hyperalg
