// Acceptance suite: one PASS/FAIL line per criterion. Expected values are
// written out here by hand and compared with what the library computes.
// Usage: acceptance [criterion ids...]
#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <map>
#include <memory>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "hyperalg/checks.hpp"
#include "hyperalg/chevalley.hpp"
#include "hyperalg/commutation.hpp"
#include "hyperalg/generators.hpp"
#include "hyperalg/hasse.hpp"
#include "hyperalg/ordinary_pbw.hpp"
#include "hyperalg/subspace.hpp"

using namespace hyperalg;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void fail(const std::string& why) {
    if (ok) detail.clear();
    ok = false;
    if (detail.size() < 600) detail += (detail.empty() ? "" : "; ") + why;
  }
  void note(const std::string& what) {
    if (ok) detail += (detail.empty() ? "" : ", ") + what;
  }
};

struct Case {
  char letter;
  int rank;
  int p;
  int r;

  std::string name() const {
    return std::string(1, letter) + std::to_string(rank) + " p=" + std::to_string(p) + " r=" + std::to_string(r);
  }
  bool operator<(const Case& o) const {
    return std::tie(letter, rank, p, r) < std::tie(o.letter, o.rank, o.p, o.r);
  }
};

int power(int p, int k) {
  int v = 1;
  while (k-- > 0) v *= p;
  return v;
}

// Roots whose exponent bound drops to p^(r-1), listed per type and prime.
std::vector<Coords> lowered_roots(char letter, int rank, int p) {
  if (p == 2 && letter == 'B' && rank == 2) return {{1, 2}};
  if (p == 2 && letter == 'B' && rank == 3) return {{1, 2, 2}, {1, 1, 2}, {0, 1, 2}};
  if (p == 2 && letter == 'C' && rank == 2) return {{2, 1}};
  if (p == 2 && letter == 'C' && rank == 3) return {{2, 2, 1}, {0, 2, 1}};
  if (p == 2 && letter == 'G') return {{2, 1}, {3, 1}, {3, 2}};
  if (p == 3 && letter == 'G') return {{3, 1}, {3, 2}};
  if (p == 2 && letter == 'F')
    return {{0, 1, 2, 0}, {1, 1, 2, 0}, {1, 2, 2, 0}, {0, 1, 2, 2}, {1, 1, 2, 2},
            {1, 2, 2, 2}, {1, 2, 4, 2}, {1, 3, 4, 2}, {2, 3, 4, 2}};
  return {};
}

std::vector<Coords> extra_generator_roots(char letter, int rank, int p) {
  if (p == 2 && letter == 'B' && rank == 2) return {{1, 2}};
  if (p == 2 && letter == 'C' && rank == 2) return {{2, 1}};
  if (p == 2 && letter == 'C' && rank == 3) return {{2, 2, 1}, {0, 2, 1}};
  if (p == 2 && letter == 'G') return {{2, 1}};
  if (p == 3 && letter == 'G') return {{3, 1}};
  return {};
}

bool is_lowered(const Case& c, const Coords& root) {
  const auto low = lowered_roots(c.letter, c.rank, c.p);
  return std::find(low.begin(), low.end(), root) != low.end();
}

// Ambient, algebra and the subalgebra generated by the simple divided powers.
struct Closure {
  std::shared_ptr<const PbwLayout> layout;
  std::unique_ptr<Algebra<PrimeField>> alg;
  std::unique_ptr<AmbientBox> box;
  ClosureResult res;
};

std::map<std::pair<Case, int>, std::unique_ptr<Closure>> g_closures;

Closure& closure(const Case& c, Mode mode = Mode::kPlus) {
  auto& slot = g_closures[{c, static_cast<int>(mode)}];
  if (!slot) {
    slot = std::make_unique<Closure>();
    slot->layout = make_layout(c.letter, c.rank, mode);
    slot->alg = std::make_unique<Algebra<PrimeField>>(slot->layout, PrimeField(static_cast<std::uint32_t>(c.p)));
    slot->box = std::make_unique<AmbientBox>(slot->layout, static_cast<std::uint32_t>(c.p), c.r);
    slot->res = span_closure(*slot->alg, standard_generators(*slot->alg, c.r), *slot->box);
  }
  return *slot;
}

// e-slot (or f-slot) monomials with exponent below p^(r-1) on lowered roots and below p^r elsewhere.
std::vector<Monomial> basis_monomials(const Case& c, const PbwLayout& L) {
  std::vector<int> slots, bounds;
  for (int s = 0; s < L.num_slots(); ++s) {
    const int id = L.slot(s).root;
    const int pos = L.roots().is_positive(id) ? id : L.roots().negate(id);
    slots.push_back(s);
    bounds.push_back(power(c.p, is_lowered(c, L.roots().root(pos).coords) ? c.r - 1 : c.r) - 1);
  }
  std::vector<Monomial> out;
  Monomial m{};
  while (true) {
    out.push_back(m);
    std::size_t k = 0;
    while (k < slots.size() && m[static_cast<std::size_t>(slots[k])] == bounds[k]) m[static_cast<std::size_t>(slots[k++])] = 0;
    if (k == slots.size()) break;
    ++m[static_cast<std::size_t>(slots[k])];
  }
  return out;
}

const std::vector<std::pair<Case, std::uint64_t>> kDimensions = {
    {{'A', 2, 2, 1}, 8},     {{'A', 2, 2, 2}, 64},     {{'A', 2, 3, 1}, 27},  {{'A', 2, 3, 2}, 729},
    {{'A', 2, 5, 1}, 125},   {{'A', 2, 5, 2}, 15625},  {{'B', 2, 2, 1}, 8},   {{'B', 2, 2, 2}, 128},
    {{'B', 3, 2, 1}, 64},    {{'C', 2, 2, 1}, 8},      {{'C', 2, 2, 2}, 128}, {{'C', 3, 2, 1}, 128},
    {{'G', 2, 2, 1}, 8},     {{'G', 2, 2, 2}, 512},    {{'G', 2, 3, 1}, 81},  {{'G', 2, 3, 2}, 59049},
    {{'G', 2, 5, 1}, 15625}, {{'D', 4, 2, 1}, 4096}};

int root_id(const RootSystem& rs, const Coords& c) { return rs.id_of(c); }

// ---------------------------------------------------------------------------

Outcome chevalley_validity() {
  Outcome out;
  const std::vector<std::pair<char, int>> types = {{'A', 1}, {'A', 2}, {'A', 3}, {'B', 2}, {'B', 3},
                                                   {'C', 2}, {'C', 3}, {'D', 4}, {'G', 2}, {'F', 4}};
  for (auto [letter, rank] : types) {
    const RootSystem rs = build_root_system(letter, rank);
    const StructureConstants sc = build_structure_constants(rs);
    try {
      check_jacobi(sc);
    } catch (const std::exception& e) {
      out.fail(rs.type().name() + ": " + e.what());
    }
    for (int a = 0; a < rs.num_roots(); ++a)
      for (int b = 0; b < rs.num_roots(); ++b) {
        if (b == rs.negate(a) || a == b) continue;
        const auto sum = rs.find(RootSystem::add(rs.root(a).coords, rs.root(b).coords));
        if (!sum) {
          if (sc.n(a, b) != 0) out.fail(rs.type().name() + " nonzero N off the root set");
          continue;
        }
        int q = 0;
        while (rs.find(RootSystem::add(rs.root(b).coords, rs.root(a).coords, -(q + 1)))) ++q;
        if (std::abs(sc.n(a, b)) != q + 1) out.fail(rs.type().name() + " |N| differs from string length + 1");
      }
  }
  const RootSystem g2 = build_root_system('G', 2);
  const StructureConstants sc = build_structure_constants(g2);
  auto id = [&](int c1, int c2) { return g2.id_of({c1, c2}); };
  // [e1,e2] = e12, [e1,e12] = 2 e112, [e1,e112] = 3 e1112, [e2,e1112] = e11122, [e112,e12] = 3 e11122
  const std::vector<std::tuple<int, int, int, int>> pinned = {{id(1, 0), id(0, 1), id(1, 1), 1},
                                                              {id(1, 0), id(1, 1), id(2, 1), 2},
                                                              {id(1, 0), id(2, 1), id(3, 1), 3},
                                                              {id(0, 1), id(3, 1), id(3, 2), 1},
                                                              {id(2, 1), id(1, 1), id(3, 2), 3}};
  for (auto [a, b, s, v] : pinned) {
    LieElement expected = sc.zero();
    expected.e_coeffs[s] = v;
    if (!(bracket(sc, sc.e(a), sc.e(b)) == expected)) out.fail("G2 bracket sign differs for pair " + std::to_string(a) + "," + std::to_string(b));
  }
  out.note(std::to_string(types.size()) + " types");
  return out;
}

Monomial random_monomial(std::mt19937_64& rng, const PbwLayout& L, int max_exp, int max_support) {
  std::uniform_int_distribution<int> slot(0, L.num_slots() - 1), ex(1, max_exp), cnt(1, max_support);
  Monomial m{};
  for (int k = cnt(rng); k > 0; --k) m[static_cast<std::size_t>(slot(rng))] = static_cast<std::uint8_t>(ex(rng));
  return m;
}

Outcome kostant_integrality() {
  Outcome out;
  std::uint64_t products = 0, terms = 0;
  for (auto [letter, rank] : {std::pair{'B', 3}, std::pair{'C', 3}, std::pair{'G', 2}}) {
    auto L = make_layout(letter, rank, Mode::kPlus);
    Algebra<IntegerRing> Z(L);
    OrdinaryPbw ordinary(L);
    std::mt19937_64 rng(1000 + static_cast<unsigned>(letter));
    for (int i = 0; i < 1000; ++i) {
      const auto x = Z.monomial(random_monomial(rng, *L, 8, 6)), y = Z.monomial(random_monomial(rng, *L, 8, 6));
      try {
        const auto q = require_integral(ordinary.multiply_divided(x, y));
        if (!(q == Z.multiply(x, y))) out.fail(std::string(1, letter) + " routes disagree on " + x.to_string() + " * " + y.to_string());
        terms += q.size();
      } catch (const IntegralityError& e) {
        out.fail(std::string(1, letter) + ": " + e.what());
      }
      ++products;
    }
  }
  out.note(std::to_string(products) + " products, " + std::to_string(terms) + " terms");
  return out;
}

Outcome commutator_shapes() {
  Outcome out;
  long long products = 0;
  for (auto [letter, rank] : {std::pair{'A', 3}, std::pair{'B', 3}, std::pair{'C', 3}, std::pair{'G', 2}}) {
    Algebra<IntegerRing> Z(make_layout(letter, rank, Mode::kPlus));
    const auto rep = check_commutator_shapes(Z, 4, 40, 11);
    products += rep.products;
    for (const auto& v : rep.violations) out.fail(std::string(1, letter) + std::to_string(rank) + " " + v);
  }
  out.note(std::to_string(products) + " commutators");
  return out;
}

Outcome g2_closed_forms() {
  Outcome out;
  Algebra<IntegerRing> Z(make_layout('G', 2, Mode::kPlus));
  for (const auto& bad : check_g2_closed_forms(Z, 4)) out.fail(bad);
  out.note("a, b in 1..4, three forms");
  return out;
}

Outcome dimensions() {
  Outcome out;
  for (const auto& [c, dim] : kDimensions) {
    Closure& cl = closure(c);
    if (cl.res.partial()) out.fail(c.name() + " closure partial");
    if (cl.res.dimension() != dim)
      out.fail(c.name() + " dim " + std::to_string(cl.res.dimension()) + " expected " + std::to_string(dim));
  }
  out.note(std::to_string(kDimensions.size()) + " cases");
  return out;
}

Outcome basis() {
  Outcome out;
  std::uint64_t total = 0;
  for (const auto& [c, dim] : kDimensions) {
    Closure& cl = closure(c);
    const auto monos = basis_monomials(c, *cl.layout);
    std::set<Monomial> distinct(monos.begin(), monos.end());
    std::uint64_t inside = 0;
    for (const auto& m : monos) inside += cl.res.space->contains(cl.alg->monomial(m));
    if (inside != monos.size()) out.fail(c.name() + " " + std::to_string(monos.size() - inside) + " basis monomials outside");
    if (distinct.size() != cl.res.dimension()) out.fail(c.name() + " basis count differs from dimension");
    total += monos.size();
  }
  out.note(std::to_string(total) + " monomials");
  return out;
}

GeneratorSet full_generators(Algebra<PrimeField>& alg, const Case& c, bool positive) {
  GeneratorSet gens = positive ? lambda_plus(alg, c.r) : lambda_minus(alg, c.r);
  const RootSystem& rs = alg.layout().roots();
  for (const auto& t : extra_generator_roots(c.letter, c.rank, c.p)) {
    const int id = positive ? root_id(rs, t) : rs.negate(root_id(rs, t));
    gens.push_back({root_power_label(rs, id, power(c.p, c.r - 1)), alg.root_vector(id, power(c.p, c.r - 1))});
  }
  return gens;
}

void generation_and_minimality(Outcome& out, const Case& c, Mode mode) {
  auto L = make_layout(c.letter, c.rank, mode);
  Algebra<PrimeField> alg(L, PrimeField(static_cast<std::uint32_t>(c.p)));
  const AmbientBox box(L, static_cast<std::uint32_t>(c.p), c.r);
  const auto gens = full_generators(alg, c, mode == Mode::kPlus);
  const std::uint64_t full = static_cast<std::uint64_t>(std::pow(c.p, c.r * L->roots().num_positive()) + 0.5);
  const auto gen = check_generates(alg, gens, box);
  if (gen.partial || gen.dim != full)
    out.fail(c.name() + " generated dim " + std::to_string(gen.dim) + " expected " + std::to_string(full));
  const auto mr = check_minimal(alg, gens, box);
  for (const auto& probe : mr.probes)
    if (probe.redundant || probe.partial) out.fail(c.name() + " generator " + probe.label + " is redundant");
  // direct form for the smaller boxes: dropping any generator loses the whole box
  if (full <= (1u << 16)) {
    for (std::size_t i = 0; i < gens.size(); ++i) {
      GeneratorSet rest = gens;
      rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
      if (check_generates(alg, rest, box).generates_all) out.fail(c.name() + " still generates without " + gens[i].label);
    }
  }
}

Outcome generating_sets() {
  Outcome out;
  const std::vector<Case> cases = {{'B', 2, 2, 1}, {'B', 2, 2, 2}, {'C', 2, 2, 1}, {'C', 2, 2, 2}, {'C', 3, 2, 1},
                                   {'C', 3, 2, 2}, {'G', 2, 2, 1}, {'G', 2, 2, 2}, {'G', 2, 3, 1}, {'G', 2, 3, 2}};
  for (const auto& c : cases) generation_and_minimality(out, c, Mode::kPlus);
  out.note(std::to_string(cases.size()) + " cases");
  return out;
}

Outcome lower_level_containment() {
  Outcome out;
  std::uint64_t checked = 0;
  for (const auto& [c, dim] : kDimensions) {
    if (c.r != 2) continue;
    Closure& cl = closure(c);
    const AmbientBox lower(cl.layout, static_cast<std::uint32_t>(c.p), c.r - 1);
    lower.for_each_monomial([&](const Monomial& m) {
      ++checked;
      if (!cl.res.space->contains(cl.alg->monomial(m))) out.fail(c.name() + " misses " + cl.layout->to_string(m));
    });
  }
  out.note(std::to_string(checked) + " monomials");
  return out;
}

Outcome memberships() {
  Outcome out;
  struct Listed {
    Case c;
    std::vector<Coords> in, out;
  };
  const std::vector<Listed> listed = {
      {{'G', 2, 2, 1}, {{1, 1}}, {{2, 1}, {3, 1}, {3, 2}}},
      {{'G', 2, 2, 2}, {{1, 1}}, {{2, 1}, {3, 1}, {3, 2}}},
      {{'G', 2, 3, 1}, {{1, 1}, {2, 1}}, {{3, 1}, {3, 2}}},
      {{'G', 2, 3, 2}, {{1, 1}, {2, 1}}, {{3, 1}, {3, 2}}},
      {{'B', 2, 2, 1}, {{1, 1}}, {{1, 2}}},
      {{'B', 2, 2, 2}, {{1, 1}}, {{1, 2}}},
      {{'B', 3, 2, 1}, {}, {{1, 2, 2}, {1, 1, 2}, {0, 1, 2}}},
      {{'C', 2, 2, 1}, {{1, 1}}, {{2, 1}}},
      {{'C', 2, 2, 2}, {{1, 1}}, {{2, 1}}},
      {{'C', 3, 2, 1}, {}, {{2, 2, 1}, {0, 2, 1}}},
  };
  int checked = 0;
  for (const auto& item : listed) {
    Closure& cl = closure(item.c);
    const RootSystem& rs = cl.layout->roots();
    const HasseData hd = hasse_and_components(rs);
    const int n = power(item.c.p, item.c.r - 1);
    auto member = [&](int id) { return cl.res.space->contains(cl.alg->root_vector(id, n)); };
    for (const auto& x : item.in)
      if (!member(root_id(rs, x))) out.fail(item.c.name() + " " + coords_label(x) + " should be inside");
    for (const auto& x : item.out)
      if (member(root_id(rs, x))) out.fail(item.c.name() + " " + coords_label(x) + " should be outside");
    for (int id = 0; id < rs.num_positive(); ++id) {
      ++checked;
      const bool listed_out = std::find(item.out.begin(), item.out.end(), rs.root(id).coords) != item.out.end();
      if (member(id) == listed_out) out.fail(item.c.name() + " " + coords_label(rs.root(id).coords) + " not covered by the list");
      if (item.c.letter != 'G' && member(id) != (hd.in_c0(id) || rs.root(id).is_short()))
        out.fail(item.c.name() + " " + coords_label(rs.root(id).coords) + " breaks the C0-or-short rule");
    }
  }

  // F4 at p=2, r=1, weight by weight up to each root
  auto L = make_layout('F', 4, Mode::kPlus);
  Algebra<PrimeField> alg(L, PrimeField(2));
  const AmbientBox box(L, 2, 1);
  const RootSystem& rs = L->roots();
  const HasseData hd = hasse_and_components(rs);
  ClosureOptions opts;
  std::vector<Coords> targets;
  for (int id = 0; id < rs.num_positive(); ++id) targets.push_back(rs.root(id).coords);
  opts.weight_targets = targets;
  const auto res = span_closure(alg, lambda_plus(alg, 1), box, opts);
  if (res.partial()) out.fail("F4 graded closure partial");
  const Case f4{'F', 4, 2, 1};
  for (int id = 0; id < rs.num_positive(); ++id) {
    ++checked;
    const bool in = res.space->contains(alg.root_vector(id, 1));
    if (in == is_lowered(f4, rs.root(id).coords)) out.fail("F4 " + coords_label(rs.root(id).coords) + " differs from the list");
    if (in != (hd.in_c0(id) || rs.root(id).is_short())) out.fail("F4 " + coords_label(rs.root(id).coords) + " breaks the C0-or-short rule");
  }
  if (!res.space->contains(alg.root_vector(rs.id_of({1, 1, 0, 0}), 1))) out.fail("F4 a1+a2 should be inside");
  if (res.space->contains(alg.root_vector(rs.id_of({0, 1, 2, 0}), 1))) out.fail("F4 a2+2a3 should be outside");
  out.note(std::to_string(checked) + " root memberships");
  return out;
}

Outcome torus() {
  Outcome out;
  int cases = 0;
  for (char letter : {'B', 'G'})
    for (int p : {2, 3})
      for (int r : {1, 2}) {
        CheckConfig cfg;
        cfg.check = "prop4.14-torus";
        cfg.letter = letter;
        cfg.rank = 2;
        cfg.p = p;
        cfg.r = r;
        const auto rep = run_check(cfg);
        const Case c{letter, 2, p, r};
        if (!rep.pass()) out.fail(c.name() + " " + rep.reason + " " + rep.detail);
        // the binomial of order p^(r-1) in each h_i must be certified
        const int q = power(p, r - 1);
        for (int i = 1; i <= 2; ++i) {
          const std::string identity = "commutator identity for (h" + std::to_string(i) + " choose " + std::to_string(q) + ")";
          const std::string direct = "(h" + std::to_string(i) + " choose " + std::to_string(q) + ") in V_r";
          const std::string rhs = "right-hand side for h" + std::to_string(i) + " lies in V_(r-1)";
          bool have_identity = false, have_rhs = false, have_direct = false;
          for (const auto& a : rep.assertions) {
            have_identity |= a.name == identity && a.ok;
            have_rhs |= a.name == rhs && a.ok;
            have_direct |= a.name == direct && a.ok;
          }
          if (!have_identity) out.fail(c.name() + " identity for h" + std::to_string(i) + " not verified");
          if (r == 1 && !have_direct) out.fail(c.name() + " h" + std::to_string(i) + " not found in the closure");
          if (r >= 2 && !have_rhs) out.fail(c.name() + " right-hand side for h" + std::to_string(i) + " not in level r-1");
        }
        ++cases;
      }
  out.note(std::to_string(cases) + " cases");
  return out;
}

Outcome triangular() {
  Outcome out;
  for (char letter : {'B', 'G'})
    for (int r : {1, 2}) {
      CheckConfig cfg;
      cfg.check = "thm4.16/17-triangular";
      cfg.letter = letter;
      cfg.rank = 2;
      cfg.p = 2;
      cfg.r = r;
      cfg.samples = 10000;
      const auto rep = run_check(cfg);
      const Case c{letter, 2, 2, r};
      if (!rep.pass()) out.fail(c.name() + " " + rep.reason + " " + rep.detail);
      const std::string products = r == 1 ? "products with generators stay in S (all 1024 pairs)"
                                          : "products with generators stay in S (sampled 10000 pairs)";
      bool seen_products = false, seen_gens = false, seen_dim = false;
      for (const auto& a : rep.assertions) {
        seen_products |= a.name == products && a.ok;
        seen_gens |= a.name == "generators lie in S" && a.ok;
        seen_dim |= a.name == "dim V_r equals dim S" && a.ok && a.actual == 256;
      }
      if (!seen_products) out.fail(c.name() + " closure of S not established");
      if (!seen_gens) out.fail(c.name() + " generators outside S");
      if (r == 1 && !seen_dim) out.fail(c.name() + " dim S is not 256");
    }
  out.note("B2, G2 at p=2, r=1 exhaustive, r=2 sampled");
  return out;
}

Outcome minus_side() {
  Outcome out;
  for (char letter : {'B', 'G'}) {
    const Case c{letter, 2, 2, 1};
    Closure& minus = closure(c, Mode::kMinus);
    Closure& plus = closure(c, Mode::kPlus);
    if (minus.res.dimension() != 8) out.fail(c.name() + " minus dim " + std::to_string(minus.res.dimension()));
    if (minus.res.dimension() != plus.res.dimension()) out.fail(c.name() + " minus and plus dimensions differ");
    for (const auto& m : basis_monomials(c, *minus.layout))
      if (!minus.res.space->contains(minus.alg->monomial(m))) out.fail(c.name() + " misses " + minus.layout->to_string(m));
    generation_and_minimality(out, c, Mode::kMinus);
  }
  out.note("B2, G2 at p=2, r=1");
  return out;
}

Outcome properties() {
  Outcome out;
  std::uint64_t assoc = 0, frob = 0, weights = 0;
  for (auto [letter, rank] : {std::pair{'B', 3}, std::pair{'C', 3}, std::pair{'G', 2}}) {
    Algebra<IntegerRing> Z(make_layout(letter, rank, Mode::kPlus));
    std::mt19937_64 rng(77 + static_cast<unsigned>(letter));
    for (int i = 0; i < 1000; ++i) {
      const auto x = Z.monomial(random_monomial(rng, Z.layout(), 4, 3)), y = Z.monomial(random_monomial(rng, Z.layout(), 4, 3)),
                 z = Z.monomial(random_monomial(rng, Z.layout(), 4, 3));
      if (!(Z.multiply(Z.multiply(x, y), z) == Z.multiply(x, Z.multiply(y, z))))
        out.fail(std::string(1, letter) + " associativity fails");
      ++assoc;
    }
  }
  for (std::uint32_t p : {2u, 3u}) {
    Algebra<PrimeField> F(make_layout('G', 2, Mode::kFull), PrimeField(p));
    std::mt19937_64 rng(p);
    std::bernoulli_distribution lift(0.6);
    for (int i = 0; i < 500; ++i) {
      auto draw = [&] {
        Monomial m = random_monomial(rng, F.layout(), 2, 3);
        if (lift(rng))
          for (auto& v : m) v = static_cast<std::uint8_t>(v * p);
        return F.monomial(m);
      };
      const auto x = draw(), y = draw();
      if (!(frobenius(F.multiply(x, y)) == F.multiply(frobenius(x), frobenius(y))))
        out.fail("Frobenius not multiplicative at p=" + std::to_string(p));
      ++frob;
    }
  }
  for (auto [letter, rank] : {std::pair{'B', 2}, std::pair{'G', 2}, std::pair{'A', 3}}) {
    Algebra<IntegerRing> Z(make_layout(letter, rank, Mode::kFull));
    const PbwLayout& L = Z.layout();
    std::mt19937_64 rng(5);
    for (int i = 0; i < 300; ++i) {
      const Monomial a = random_monomial(rng, L, 3, 4), b = random_monomial(rng, L, 3, 4);
      const Coords w = RootSystem::add(L.weight(a), L.weight(b));
      for (const auto& [m, v] : Z.multiply(Z.monomial(a), Z.monomial(b)).terms)
        if (L.weight(m) != w) out.fail("weight not additive");
      ++weights;
    }
  }
  // dim of the level-1 closure for two reduced words
  const std::vector<std::tuple<char, int, std::vector<int>, std::vector<int>, std::uint64_t>> words = {
      {'B', 2, {1, 2, 1, 2}, {2, 1, 2, 1}, 8}, {'A', 3, {1, 2, 1, 3, 2, 1}, {3, 2, 3, 1, 2, 3}, 64}};
  for (const auto& [letter, rank, w1, w2, dim] : words) {
    for (const auto& w : {w1, w2}) {
      auto L = make_layout(letter, rank, Mode::kPlus, w);
      Algebra<PrimeField> F(L, PrimeField(2));
      const AmbientBox box(L, 2, 1);
      const auto res = span_closure(F, lambda_plus(F, 1), box);
      if (res.dimension() != dim) out.fail(std::string(1, letter) + std::to_string(rank) + " dim depends on the word");
    }
    if (make_layout(letter, rank, Mode::kPlus, w1)->order().ordered_roots ==
        make_layout(letter, rank, Mode::kPlus, w2)->order().ordered_roots)
      out.fail("words give the same order");
  }
  out.note(std::to_string(assoc) + " triples, " + std::to_string(frob) + " Frobenius pairs, " + std::to_string(weights) +
           " weight products, 2 order pairs");
  return out;
}

struct Criterion {
  int id;
  std::string title;
  double limit_s;  // 0 = no limit
  std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> all = {
      {1, "Chevalley basis: Jacobi, |N| = string length + 1, pinned G2 signs", 10, chevalley_validity},
      {2, "integrality of 3000 random divided-power products in B3, C3, G2", 120, kostant_integrality},
      {3, "commutator support shapes for all pairs, a, b <= 4 in A3, B3, C3, G2", 300, commutator_shapes},
      {4, "G2 closed product forms for a, b <= 4", 60, g2_closed_forms},
      {5, "dimensions of the subalgebras generated by simple divided powers", 600, dimensions},
      {6, "bounded monomial bases lie in the closures and count their dimension", 0, basis},
      {7, "simple divided powers with Theta generate and are minimal", 900, generating_sets},
      {8, "level r-1 boxes lie in the level r closures", 0, lower_level_containment},
      {9, "root vector memberships, including F4 weight by weight", 600, memberships},
      {10, "torus binomials in the full level r subalgebra", 0, torus},
      {11, "triangular span closed under the simple divided powers", 0, triangular},
      {12, "minus side mirrors dimensions, bases, generation and minimality", 0, minus_side},
      {13, "associativity, Frobenius, weights and order independence", 0, properties},
  };
  std::set<int> wanted;
  for (int i = 1; i < argc; ++i) wanted.insert(std::atoi(argv[i]));

  int failures = 0;
  for (const auto& c : all) {
    if (!wanted.empty() && !wanted.count(c.id)) continue;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.limit_s > 0 && s > c.limit_s) o.fail("took " + std::to_string(s) + " s, limit " + std::to_string(c.limit_s));
    failures += !o.ok;
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(2);
    line << (o.ok ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.title << " [" << o.detail << "] (" << s
         << " s)";
    std::cout << line.str() << std::endl;
  }
  std::cout << (failures ? "FAILED " : "ALL PASSED ") << "(" << failures << " failing)" << std::endl;
  return failures ? 1 : 0;
}
