#pragma once

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "hyperalg/monomial.hpp"
#include "hyperalg/straighten.hpp"

namespace hyperalg {

inline std::shared_ptr<const PbwLayout> make_layout(char letter, int rank, Mode mode,
                                                    const std::optional<std::vector<int>>& word = std::nullopt) {
  const RootSystem rs = build_root_system(letter, rank);
  return std::make_shared<const PbwLayout>(rs, convex_order(rs, word), mode);
}

/// Finite combination of PBW monomials with nonzero coefficients, kept sorted
/// by the canonical monomial order.
template <class Ring>
struct Element {
  using V = typename Ring::value_type;

  std::shared_ptr<const PbwLayout> layout;
  Ring ring;
  Terms<V> terms;

  bool is_zero() const { return terms.empty(); }
  std::size_t size() const { return terms.size(); }

  V coefficient(const Monomial& m) const {
    auto it = std::lower_bound(terms.begin(), terms.end(), m,
                               [](const auto& t, const Monomial& k) { return t.first < k; });
    return it != terms.end() && it->first == m ? it->second : ring.zero();
  }

  Element operator+(const Element& o) const { return combine(o, false); }
  Element operator-(const Element& o) const { return combine(o, true); }
  Element scaled(const V& c) const {
    Element out{layout, ring, {}};
    for (const auto& [m, v] : terms) {
      V x = ring.mul(c, v);
      if (!ring.is_zero(x)) out.terms.emplace_back(m, std::move(x));
    }
    return out;
  }
  bool operator==(const Element& o) const { return terms == o.terms; }

  std::string to_string() const {
    if (terms.empty()) return "0";
    std::string out;
    for (const auto& [m, v] : terms) {
      if (!out.empty()) out += " + ";
      out += ring.to_string(v) + "*" + layout->to_string(m);
    }
    return out;
  }

 private:
  Element combine(const Element& o, bool subtract) const {
    if (layout && o.layout && !layout->same_algebra(*o.layout))
      throw std::invalid_argument("elements belong to different algebras");
    Element out{layout ? layout : o.layout, ring, {}};
    std::size_t i = 0, j = 0;
    while (i < terms.size() || j < o.terms.size()) {
      if (j == o.terms.size() || (i < terms.size() && terms[i].first < o.terms[j].first)) {
        out.terms.push_back(terms[i++]);
      } else {
        V rhs = subtract ? ring.neg(o.terms[j].second) : o.terms[j].second;
        if (i < terms.size() && terms[i].first == o.terms[j].first) {
          V s = ring.add(terms[i].second, rhs);
          if (!ring.is_zero(s)) out.terms.emplace_back(terms[i].first, std::move(s));
          ++i;
        } else {
          out.terms.emplace_back(o.terms[j].first, std::move(rhs));
        }
        ++j;
      }
    }
    return out;
  }
};

/// Multiplication in the divided-power PBW basis over a coefficient ring.
template <class Ring>
class Algebra {
 public:
  using V = typename Ring::value_type;

  explicit Algebra(std::shared_ptr<const PbwLayout> layout, Ring ring = {},
                   std::shared_ptr<PairTable> pairs = nullptr,
                   std::size_t memo_terms = Straightener<Ring>::kDefaultMemoTerms)
      : layout_(std::move(layout)),
        pairs_(pairs ? std::move(pairs) : std::make_shared<PairTable>(layout_)),
        engine_(layout_, pairs_.get(), ring, memo_terms) {
    if (!pairs_->layout().same_algebra(*layout_)) throw std::invalid_argument("pair table from another algebra");
  }

  const PbwLayout& layout() const { return *layout_; }
  const std::shared_ptr<const PbwLayout>& layout_ptr() const { return layout_; }
  const std::shared_ptr<PairTable>& pairs() const { return pairs_; }
  const Ring& ring() const { return engine_.ring(); }
  Straightener<Ring>& engine() { return engine_; }

  Element<Ring> zero() const { return {layout_, ring(), {}}; }
  Element<Ring> unit() const { return monomial(PbwLayout::unit()); }
  Element<Ring> monomial(const Monomial& m, std::optional<V> c = std::nullopt) const {
    Element<Ring> out{layout_, ring(), {}};
    V v = c ? *c : ring().one();
    if (!ring().is_zero(v)) out.terms.emplace_back(m, std::move(v));
    return out;
  }
  Element<Ring> parse_monomial(const std::string& text) const { return monomial(layout_->parse(text)); }
  /// Single factor F_s(n).
  Element<Ring> factor(int slot, int n) const {
    Monomial m{};
    m[static_cast<std::size_t>(slot)] = static_cast<std::uint8_t>(n);
    return monomial(m);
  }
  Element<Ring> e(int convex_index, int n = 1) const { return factor(require(layout_->e_slot(convex_index)), n); }
  Element<Ring> f(int convex_index, int n = 1) const { return factor(require(layout_->f_slot(convex_index)), n); }
  Element<Ring> h(int i, int n = 1) const { return factor(require(layout_->h_slot(i)), n); }
  /// Divided power of the root vector of a root id (positive or negative).
  Element<Ring> root_vector(int root_id, int n = 1) const { return factor(require(layout_->slot_of_root(root_id)), n); }

  Element<Ring> multiply(const Element<Ring>& x, const Element<Ring>& y) {
    check(x);
    check(y);
    return {layout_, ring(), engine_.multiply(x.terms, y.terms)};
  }
  Element<Ring> multiply(std::initializer_list<Element<Ring>> factors) {
    Element<Ring> acc = unit();
    for (const auto& f : factors) acc = multiply(acc, f);
    return acc;
  }
  /// x*y - y*x
  Element<Ring> commutator(const Element<Ring>& x, const Element<Ring>& y) { return multiply(x, y) - multiply(y, x); }

 private:
  static int require(int slot) {
    if (slot < 0) throw std::invalid_argument("factor is not part of this ambient");
    return slot;
  }
  void check(const Element<Ring>& x) const {
    if (x.layout && !x.layout->same_algebra(*layout_)) throw std::invalid_argument("element from another algebra");
    if (!(x.ring == ring())) throw std::invalid_argument("element over another coefficient ring");
  }

  std::shared_ptr<const PbwLayout> layout_;
  std::shared_ptr<PairTable> pairs_;
  Straightener<Ring> engine_;
};

inline Element<PrimeField> reduce_mod_p(const Element<IntegerRing>& x, std::uint32_t p) {
  const PrimeField F(p);
  Element<PrimeField> out{x.layout, F, {}};
  for (const auto& [m, v] : x.terms) {
    const auto r = F.from_big(v);
    if (r) out.terms.emplace_back(m, r);
  }
  return out;
}

inline std::optional<Monomial> frobenius(const Monomial& m, int p) {
  Monomial out{};
  for (std::size_t s = 0; s < m.size(); ++s) {
    if (m[s] % p) return std::nullopt;
    out[s] = static_cast<std::uint8_t>(m[s] / p);
  }
  return out;
}

/// Fr divides every exponent by p and kills monomials with a non-multiple.
inline Element<PrimeField> frobenius(const Element<PrimeField>& x) {
  Element<PrimeField> out{x.layout, x.ring, {}};
  for (const auto& [m, v] : x.terms)
    if (auto fm = frobenius(m, static_cast<int>(x.ring.p))) out.terms.emplace_back(*fm, v);
  return out;
}

inline Coords weight_of(const PbwLayout& layout, const Monomial& m) { return layout.weight(m); }

template <class Ring>
nlohmann::json to_json(const Element<Ring>& x) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [m, v] : x.terms) arr.push_back({x.layout->to_string(m), x.ring.to_string(v)});
  return arr;
}

template <class Ring>
Element<Ring> element_from_json(const nlohmann::json& j, std::shared_ptr<const PbwLayout> layout, Ring ring = {}) {
  Accumulator<Ring> acc(ring);
  for (const auto& t : j) acc.add(layout->parse(t.at(0).get<std::string>()), ring.parse(t.at(1).get<std::string>()));
  return {std::move(layout), ring, acc.take()};
}

}  // namespace hyperalg
