#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <deque>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "hyperalg/algebra.hpp"

namespace hyperalg {

struct CoordsHash {
  std::size_t operator()(const Coords& c) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (int x : c) h = (h ^ static_cast<std::size_t>(static_cast<std::uint32_t>(x))) * 0x100000001b3ULL;
    return h;
  }
};

/// Default cap on the number of box monomials in one weight component.
constexpr std::uint64_t kDefaultBudget = std::uint64_t{1} << 20;

/// HYPERALG_BUDGET if set to a positive integer, else the default.
inline std::uint64_t budget_from_env() {
  if (const char* v = std::getenv("HYPERALG_BUDGET")) {
    char* end = nullptr;
    const unsigned long long n = std::strtoull(v, &end, 10);
    if (end != v && *end == '\0' && n > 0) return n;
  }
  return kDefaultBudget;
}

/// Bounded PBW monomials: exponent of slot s at most bound(s).
class AmbientBox {
 public:
  AmbientBox(std::shared_ptr<const PbwLayout> layout, std::uint32_t p, int r)
      : layout_(std::move(layout)), p_(p), r_(r) {
    if (r < 0) throw std::invalid_argument("level r must be nonnegative");
    PrimeField check(p);
    long long top = 1;
    for (int k = 0; k < r; ++k) {
      top *= p;
      if (top > 256) throw std::invalid_argument("p^r above 256 is outside the exponent range");
    }
    bounds_.assign(static_cast<std::size_t>(layout_->num_slots()), static_cast<int>(top - 1));
  }

  AmbientBox(std::shared_ptr<const PbwLayout> layout, std::uint32_t p, int r, std::vector<int> slot_bounds)
      : AmbientBox(std::move(layout), p, r) {
    if (slot_bounds.size() != bounds_.size()) throw std::invalid_argument("one bound per slot expected");
    for (int b : slot_bounds)
      if (b < 0 || b > 255) throw std::invalid_argument("slot bound out of range");
    bounds_ = std::move(slot_bounds);
  }

  const PbwLayout& layout() const { return *layout_; }
  const std::shared_ptr<const PbwLayout>& layout_ptr() const { return layout_; }
  std::uint32_t p() const { return p_; }
  int r() const { return r_; }
  Mode mode() const { return layout_->mode(); }
  int bound(int slot) const { return bounds_[static_cast<std::size_t>(slot)]; }
  const std::vector<int>& bounds() const { return bounds_; }

  bool contains(const Monomial& m) const {
    for (int s = 0; s < layout_->num_slots(); ++s)
      if (m[static_cast<std::size_t>(s)] > bounds_[static_cast<std::size_t>(s)]) return false;
    for (int s = layout_->num_slots(); s < kMaxSlots; ++s)
      if (m[static_cast<std::size_t>(s)]) return false;
    return true;
  }

  BigInt dimension() const {
    BigInt d = 1;
    for (int b : bounds_) d *= (b + 1);
    return d;
  }

  /// Number of box monomials of weight w. With `local` set and a one-signed
  /// ambient, counts only through weights between 0 and w instead of
  /// tabulating every weight.
  std::uint64_t capacity(const Coords& w, bool local = false) const {
    if (const auto it = cap_cache_.find(w); it != cap_cache_.end()) return it->second;
    if (local && !global_done_ && layout_->mode() != Mode::kFull) {
      const std::uint64_t c = count_with_weight(w);
      cap_cache_.emplace(w, c);
      return c;
    }
    build_global();
    const auto it = cap_cache_.find(w);
    return it == cap_cache_.end() ? 0 : it->second;
  }

  /// Calls f(m) for every box monomial, in canonical order.
  template <class F>
  void for_each_monomial(F f) const {
    Monomial m{};
    const int n = layout_->num_slots();
    while (true) {
      f(static_cast<const Monomial&>(m));
      int s = n - 1;
      while (s >= 0 && m[static_cast<std::size_t>(s)] == bounds_[static_cast<std::size_t>(s)]) {
        m[static_cast<std::size_t>(s)] = 0;
        --s;
      }
      if (s < 0) return;
      ++m[static_cast<std::size_t>(s)];
    }
  }

 private:
  Coords slot_weight(int s) const {
    const Slot& sl = layout_->slot(s);
    Coords w(static_cast<std::size_t>(layout_->roots().rank()), 0);
    if (sl.kind != SlotKind::kH) w = layout_->roots().root(sl.root).coords;
    return w;
  }

  // Sign-consistent ambient: every weight between 0 and w coordinatewise.
  std::uint64_t count_with_weight(const Coords& w) const {
    auto inside = [&](const Coords& v) {
      for (std::size_t i = 0; i < v.size(); ++i)
        if ((w[i] >= 0 && (v[i] < 0 || v[i] > w[i])) || (w[i] < 0 && (v[i] > 0 || v[i] < w[i]))) return false;
      return true;
    };
    std::unordered_map<Coords, std::uint64_t, CoordsHash> cur{{Coords(w.size(), 0), 1}};
    for (int s = 0; s < layout_->num_slots(); ++s) {
      const Coords sw = slot_weight(s);
      std::unordered_map<Coords, std::uint64_t, CoordsHash> next;
      for (const auto& [v, c] : cur) {
        for (int n = 0; n <= bounds_[static_cast<std::size_t>(s)]; ++n) {
          const Coords u = RootSystem::add(v, sw, n);
          if (!inside(u)) break;
          next[u] += c;
        }
      }
      cur = std::move(next);
    }
    const auto it = cur.find(w);
    return it == cur.end() ? 0 : it->second;
  }

  void build_global() const {
    if (global_done_) return;
    std::unordered_map<Coords, std::uint64_t, CoordsHash> cur{
        {Coords(static_cast<std::size_t>(layout_->roots().rank()), 0), 1}};
    for (int s = 0; s < layout_->num_slots(); ++s) {
      const Coords sw = slot_weight(s);
      std::unordered_map<Coords, std::uint64_t, CoordsHash> next;
      for (const auto& [v, c] : cur)
        for (int n = 0; n <= bounds_[static_cast<std::size_t>(s)]; ++n) next[RootSystem::add(v, sw, n)] += c;
      cur = std::move(next);
    }
    cap_cache_ = std::move(cur);
    global_done_ = true;
  }

  std::shared_ptr<const PbwLayout> layout_;
  std::uint32_t p_;
  int r_;
  std::vector<int> bounds_;
  mutable std::unordered_map<Coords, std::uint64_t, CoordsHash> cap_cache_;
  mutable bool global_done_ = false;
};

/// Labelled weight-homogeneous generator.
struct Generator {
  std::string label;
  Element<PrimeField> element;
};
using GeneratorSet = std::vector<Generator>;

/// Subspace of an ambient box stored per weight component in echelon form; the
/// pivot of a row is its smallest monomial in the canonical order.
class GradedSubspace {
 public:
  using Row = Terms<std::uint32_t>;

  explicit GradedSubspace(const AmbientBox& box) : box_(&box), field_(box.p()) {}

  const AmbientBox& box() const { return *box_; }
  const PrimeField& field() const { return field_; }
  void set_local_capacity(bool local) { local_capacity_ = local; }

  std::uint64_t dimension() const {
    std::uint64_t d = 0;
    for (const auto& [w, c] : comps_) d += c.rows.size();
    return d;
  }
  std::uint64_t component_dimension(const Coords& w) const {
    const auto it = comps_.find(w);
    return it == comps_.end() ? 0 : it->second.rows.size();
  }
  bool component_full(const Coords& w) const {
    const auto it = comps_.find(w);
    return it != comps_.end() && it->second.full;
  }

  /// Weights with at least one row, sorted.
  std::vector<Coords> weights() const {
    std::vector<Coords> out;
    for (const auto& [w, c] : comps_)
      if (!c.rows.empty()) out.push_back(w);
    std::sort(out.begin(), out.end());
    return out;
  }

  const std::vector<Row>& rows(const Coords& w) const {
    static const std::vector<Row> empty;
    const auto it = comps_.find(w);
    return it == comps_.end() ? empty : it->second.rows;
  }

  /// Splits x into weight components; throws if a term leaves the box.
  std::map<Coords, Row> split(const Element<PrimeField>& x) const {
    check_field(x);
    std::map<Coords, Row> parts;
    for (const auto& [m, v] : x.terms) {
      if (!box_->contains(m)) throw std::invalid_argument("monomial " + box_->layout().to_string(m) + " outside the box");
      parts[box_->layout().weight(m)].emplace_back(m, v);
    }
    return parts;
  }

  /// Remainder of a homogeneous row of weight w after reduction.
  Row reduce(const Coords& w, const Row& x) const {
    const auto it = comps_.find(w);
    if (it == comps_.end() || x.empty()) return x;
    if (it->second.full) return {};
    return reduce_in(it->second, x);
  }

  bool contains(const Element<PrimeField>& x) const {
    for (const auto& [w, row] : split(x))
      if (!reduce(w, row).empty()) return false;
    return true;
  }

  /// Inserts the homogeneous row x of weight w; returns the reduced vector
  /// that was added, or an empty row if x was already in the span.
  Row insert(const Coords& w, const Row& x) {
    auto [it, fresh] = comps_.try_emplace(w);
    Component& c = it->second;
    if (fresh) c.capacity = box_->capacity(w, local_capacity_);
    if (c.full || x.empty()) return {};
    Row red = reduce_in(c, x);
    if (red.empty()) return {};
    const std::uint32_t inv = field_.inv(red.front().second);
    for (auto& [m, v] : red) v = field_.mul(v, inv);
    const Monomial q = red.front().first;
    if (const auto occ = c.occurs.find(q); occ != c.occurs.end()) {
      const std::vector<std::size_t> hits = std::move(occ->second);
      c.occurs.erase(occ);
      for (std::size_t i : hits) eliminate(c, i, red);
    }
    const std::size_t id = c.rows.size();
    c.pivot.emplace(q, id);
    for (std::size_t k = 1; k < red.size(); ++k) c.occurs[red[k].first].push_back(id);
    c.rows.push_back(red);
    c.sorted = false;
    if (c.rows.size() == c.capacity) c.full = true;
    return red;
  }

  bool insert(const Element<PrimeField>& x) {
    bool grew = false;
    for (const auto& [w, row] : split(x)) grew |= !insert(w, row).empty();
    return grew;
  }

  /// Sorts the rows of every component by pivot.
  void finalize() {
    for (auto& [w, c] : comps_) {
      if (c.sorted) continue;
      std::sort(c.rows.begin(), c.rows.end(), [](const Row& a, const Row& b) { return a.front().first < b.front().first; });
      c.pivot.clear();
      c.occurs.clear();
      for (std::size_t i = 0; i < c.rows.size(); ++i) {
        c.pivot.emplace(c.rows[i].front().first, i);
        for (std::size_t k = 1; k < c.rows[i].size(); ++k) c.occurs[c.rows[i][k].first].push_back(i);
      }
      c.sorted = true;
    }
  }

  /// One line per row: weight label, then the row's monomials with coefficients.
  std::string to_csv() const {
    std::ostringstream os;
    os << "weight,pivot,row\n";
    for (const auto& w : weights()) {
      for (const auto& row : rows(w)) {
        os << coords_label(w) << ',' << box_->layout().to_string(row.front().first) << ',';
        for (std::size_t i = 0; i < row.size(); ++i)
          os << (i ? " + " : "") << row[i].second << '*' << box_->layout().to_string(row[i].first);
        os << '\n';
      }
    }
    return os.str();
  }

 private:
  // Rows are kept in reduced echelon form: no row mentions another row's pivot.
  struct Component {
    std::vector<Row> rows;
    std::unordered_map<Monomial, std::size_t, MonomialHash> pivot;
    /// Non-pivot monomial -> rows whose tail may contain it.
    std::unordered_map<Monomial, std::vector<std::size_t>, MonomialHash> occurs;
    std::uint64_t capacity = 0;
    bool full = false;
    bool sorted = true;
  };

  void check_field(const Element<PrimeField>& x) const {
    if (!(x.ring == field_)) throw std::invalid_argument("element over another field");
    if (x.layout && !x.layout->same_algebra(box_->layout())) throw std::invalid_argument("element from another algebra");
  }

  Row reduce_in(const Component& c, const Row& x) const {
    if (std::none_of(x.begin(), x.end(), [&](const auto& t) { return c.pivot.count(t.first) > 0; })) return x;
    Accumulator<PrimeField> acc(field_);
    for (const auto& [m, v] : x) {
      const auto pv = c.pivot.find(m);
      if (pv == c.pivot.end()) {
        acc.add(m, v);
        continue;
      }
      const Row& row = c.rows[pv->second];
      const std::uint32_t neg = field_.neg(v);
      for (std::size_t i = 1; i < row.size(); ++i) acc.add(row[i].first, field_.mul(neg, row[i].second));
    }
    return acc.take();
  }

  // rows[i] -= coef * r, where coef is the entry of rows[i] at r's pivot.
  void eliminate(Component& c, std::size_t i, const Row& r) {
    Row& row = c.rows[i];
    const Monomial& q = r.front().first;
    const auto at = std::lower_bound(row.begin(), row.end(), q, [](const auto& t, const Monomial& k) { return t.first < k; });
    if (at == row.end() || at->first != q) return;
    const std::uint32_t neg = field_.neg(at->second);
    Row out;
    out.reserve(row.size() + r.size());
    std::size_t a = 0, b = 0;
    while (a < row.size() || b < r.size()) {
      if (b == r.size() || (a < row.size() && row[a].first < r[b].first)) {
        out.push_back(row[a++]);
      } else if (a == row.size() || r[b].first < row[a].first) {
        out.emplace_back(r[b].first, field_.mul(neg, r[b].second));
        c.occurs[r[b].first].push_back(i);
        ++b;
      } else {
        const std::uint32_t v = field_.add(row[a].second, field_.mul(neg, r[b].second));
        if (v) out.emplace_back(row[a].first, v);
        ++a;
        ++b;
      }
    }
    row = std::move(out);
  }

  const AmbientBox* box_;
  PrimeField field_;
  bool local_capacity_ = false;
  std::unordered_map<Coords, Component, CoordsHash> comps_;
};

struct ClosureOptions {
  std::uint64_t budget = budget_from_env();
  /// Restrict to weights between 0 and one of these targets (coordinatewise);
  /// requires every generator weight to point the same way.
  std::optional<std::vector<Coords>> weight_targets;
};

struct ClosureResult {
  std::unique_ptr<GradedSubspace> space;
  /// Vectors added to the span, in discovery order; their span is `space`.
  std::vector<Element<PrimeField>> spanning;
  /// Weights whose components were skipped for exceeding the budget.
  std::vector<Coords> skipped;
  std::uint64_t products = 0;

  bool partial() const { return !skipped.empty(); }
  std::uint64_t dimension() const { return space->dimension(); }
};

namespace detail {

inline bool within_targets(const Coords& w, const std::vector<Coords>& targets) {
  for (const auto& t : targets) {
    bool ok = true;
    for (std::size_t i = 0; i < w.size() && ok; ++i)
      ok = t[i] >= 0 ? (w[i] >= 0 && w[i] <= t[i]) : (w[i] <= 0 && w[i] >= t[i]);
    if (ok) return true;
  }
  return false;
}

inline Coords element_weight(const Element<PrimeField>& x) {
  if (x.is_zero()) throw std::invalid_argument("zero generator");
  const Coords w = x.layout->weight(x.terms.front().first);
  for (const auto& [m, v] : x.terms)
    if (x.layout->weight(m) != w) throw std::invalid_argument("generator is not weight-homogeneous");
  return w;
}

// Single factor F_s(n) with coefficient 1, as (s, n).
inline std::optional<std::pair<int, int>> single_factor(const Element<PrimeField>& x) {
  if (x.terms.size() != 1 || x.terms[0].second != 1) return std::nullopt;
  int slot = -1;
  for (int s = 0; s < kMaxSlots; ++s) {
    if (!x.terms[0].first[static_cast<std::size_t>(s)]) continue;
    if (slot >= 0) return std::nullopt;
    slot = s;
  }
  if (slot < 0) return std::nullopt;
  return std::pair{slot, static_cast<int>(x.terms[0].first[static_cast<std::size_t>(slot)])};
}

}  // namespace detail

/// Unital subalgebra generated by gens inside the box, built by right
/// multiplication from 1 until no new vectors appear.
inline ClosureResult span_closure(Algebra<PrimeField>& alg, const GeneratorSet& gens, const AmbientBox& box,
                                  const ClosureOptions& opts = {}) {
  if (!alg.layout().same_algebra(box.layout())) throw std::invalid_argument("box from another algebra");
  if (alg.ring().p != box.p()) throw std::invalid_argument("field and box characteristic differ");
  std::vector<Coords> gen_w;
  for (const auto& g : gens) {
    gen_w.push_back(detail::element_weight(g.element));
    for (const auto& [m, v] : g.element.terms)
      if (!box.contains(m)) throw std::invalid_argument("generator " + g.label + " lies outside the box");
  }
  if (opts.weight_targets) {
    bool nonneg = true, nonpos = true;
    for (const auto& w : gen_w)
      for (int x : w) {
        nonneg &= x >= 0;
        nonpos &= x <= 0;
      }
    if (!nonneg && !nonpos) throw std::invalid_argument("weight-bounded closure needs one-signed generator weights");
  }

  ClosureResult res;
  res.space = std::make_unique<GradedSubspace>(box);
  GradedSubspace& V = *res.space;
  const bool local = opts.weight_targets.has_value();
  V.set_local_capacity(local);
  const Coords zero_w(static_cast<std::size_t>(box.layout().roots().rank()), 0);
  std::set<Coords> skipped;

  auto admit = [&](const Coords& w) {
    if (opts.weight_targets && !detail::within_targets(w, *opts.weight_targets)) return false;
    if (V.component_full(w)) return false;
    if (box.capacity(w, local) > opts.budget) {
      skipped.insert(w);
      return false;
    }
    return true;
  };

  std::deque<std::size_t> queue;
  auto add = [&](const Coords& w, const GradedSubspace::Row& row) {
    const auto red = V.insert(w, row);
    if (red.empty()) return;
    res.spanning.push_back(Element<PrimeField>{box.layout_ptr(), alg.ring(), red});
    queue.push_back(res.spanning.size() - 1);
  };

  if (admit(zero_w)) add(zero_w, {{PbwLayout::unit(), 1u}});
  auto& engine = alg.engine();
  while (!queue.empty()) {
    const std::size_t idx = queue.front();
    queue.pop_front();
    const Coords w = box.layout().weight(res.spanning[idx].terms.front().first);
    for (std::size_t gi = 0; gi < gens.size(); ++gi) {
      const Coords target = RootSystem::add(w, gen_w[gi]);
      if (!admit(target)) continue;
      const auto& v = res.spanning[idx].terms;
      Terms<std::uint32_t> prod;
      if (const auto sf = detail::single_factor(gens[gi].element))
        prod = engine.mul_terms_right(v, sf->first, sf->second);
      else
        prod = engine.multiply(v, gens[gi].element.terms);
      ++res.products;
      for (const auto& [m, c] : prod)
        if (!box.contains(m))
          throw std::logic_error("product with " + gens[gi].label + " leaves the box at " + box.layout().to_string(m));
      add(target, prod);
    }
  }
  V.finalize();
  res.skipped.assign(skipped.begin(), skipped.end());
  return res;
}

struct GenerationResult {
  bool generates_all = false;
  std::uint64_t dim = 0;
  BigInt box_dim = 0;
  bool partial = false;
};

inline GenerationResult check_generates(Algebra<PrimeField>& alg, const GeneratorSet& gens, const AmbientBox& box,
                                        const ClosureOptions& opts = {}) {
  const auto res = span_closure(alg, gens, box, opts);
  GenerationResult out;
  out.dim = res.dimension();
  out.box_dim = box.dimension();
  out.partial = res.partial();
  out.generates_all = !out.partial && BigInt(out.dim) == out.box_dim;
  return out;
}

/// Membership of one generator in the subalgebra generated by the others.
struct RedundancyProbe {
  std::string label;
  bool redundant = false;
  /// Rank and capacity of the generator's weight component in that subalgebra.
  std::uint64_t component_dim = 0;
  std::uint64_t component_capacity = 0;
  bool partial = false;
};

struct MinimalityResult {
  bool minimal = false;
  bool partial = false;
  std::vector<RedundancyProbe> probes;
};

/// gens is minimal iff no generator lies in the subalgebra generated by the
/// rest. Each probe closes gens minus g only up to the weight of g, which is
/// exact for one-signed generator weights; otherwise the full closure is used.
inline MinimalityResult check_minimal(Algebra<PrimeField>& alg, const GeneratorSet& gens, const AmbientBox& box,
                                      const ClosureOptions& opts = {}) {
  MinimalityResult out;
  out.minimal = true;
  bool one_signed_pos = true, one_signed_neg = true;
  for (const auto& g : gens)
    for (int x : detail::element_weight(g.element)) {
      one_signed_pos &= x >= 0;
      one_signed_neg &= x <= 0;
    }
  for (std::size_t i = 0; i < gens.size(); ++i) {
    GeneratorSet rest;
    for (std::size_t j = 0; j < gens.size(); ++j)
      if (j != i) rest.push_back(gens[j]);
    const Coords w = detail::element_weight(gens[i].element);
    ClosureOptions o = opts;
    if (one_signed_pos || one_signed_neg) o.weight_targets = std::vector<Coords>{w};
    const auto res = span_closure(alg, rest, box, o);
    RedundancyProbe probe;
    probe.label = gens[i].label;
    probe.redundant = res.space->contains(gens[i].element);
    probe.component_dim = res.space->component_dimension(w);
    probe.component_capacity = box.capacity(w, o.weight_targets.has_value());
    probe.partial = res.partial();
    out.partial |= probe.partial;
    out.minimal &= !probe.redundant && !probe.partial;
    out.probes.push_back(std::move(probe));
  }
  return out;
}

struct StabilityResult {
  bool stable = true;
  std::uint64_t checked = 0;
  std::string witness;
};

/// Checks g * v in the closure for generators g and spanning vectors v; all
/// pairs when their count is at most max_pairs, else max_pairs random pairs.
inline StabilityResult check_left_stable(Algebra<PrimeField>& alg, const ClosureResult& closure,
                                         const GeneratorSet& gens, std::uint64_t max_pairs, std::uint64_t seed = 1) {
  StabilityResult out;
  if (gens.empty() || closure.spanning.empty()) return out;
  const std::uint64_t total = closure.spanning.size() * gens.size();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> pick(0, total - 1);
  const bool all = total <= max_pairs;
  const std::uint64_t n = all ? total : max_pairs;
  for (std::uint64_t k = 0; k < n; ++k) {
    const std::uint64_t idx = all ? k : pick(rng);
    const auto& v = closure.spanning[idx / gens.size()];
    const auto& g = gens[idx % gens.size()];
    const auto prod = alg.multiply(g.element, v);
    ++out.checked;
    bool in = true;
    for (const auto& [m, c] : prod.terms) in &= closure.space->box().contains(m);
    if (!in || !closure.space->contains(prod)) {
      out.stable = false;
      out.witness = g.label + " * (" + v.to_string() + ")";
      return out;
    }
  }
  return out;
}

}  // namespace hyperalg
