#pragma once

#include <algorithm>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "hyperalg/monomial.hpp"
#include "hyperalg/scalar.hpp"

namespace hyperalg {

template <class V>
using Terms = std::vector<std::pair<Monomial, V>>;

/// Sparse accumulator producing canonical (sorted, nonzero) term lists.
template <class Ring>
class Accumulator {
 public:
  using V = typename Ring::value_type;
  explicit Accumulator(const Ring& ring) : ring_(ring) {}

  void add(const Monomial& m, const V& v) {
    if (ring_.is_zero(v)) return;
    auto [it, fresh] = map_.try_emplace(m, v);
    if (!fresh) it->second = ring_.add(it->second, v);
  }
  void add_scaled(const Terms<V>& terms, const V& scale) {
    for (const auto& [m, v] : terms) add(m, ring_.mul(scale, v));
  }
  Terms<V> take() {
    Terms<V> out;
    out.reserve(map_.size());
    for (auto& [m, v] : map_)
      if (!ring_.is_zero(v)) out.emplace_back(m, std::move(v));
    map_.clear();
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
  }

 private:
  Ring ring_;
  std::unordered_map<Monomial, V, MonomialHash> map_;
};

template <class Ring>
class Straightener;

/// Normal forms of two-factor products F_s(c) F_t(b) with s > t, exact over Z.
/// F_s(n) is e^(n) for an e/f slot and (h_i choose n) for an h slot.
class PairTable {
 public:
  explicit PairTable(std::shared_ptr<const PbwLayout> layout);
  ~PairTable();
  PairTable(const PairTable&) = delete;
  PairTable& operator=(const PairTable&) = delete;

  const Terms<BigInt>& get(int s, int c, int t, int b);
  const PbwLayout& layout() const { return *layout_; }
  const std::shared_ptr<const PbwLayout>& layout_ptr() const { return layout_; }
  std::size_t size() const { return cache_.size(); }

 private:
  static std::uint32_t key(int s, int c, int t, int b) {
    return static_cast<std::uint32_t>(s) << 24 | static_cast<std::uint32_t>(c) << 16 |
           static_cast<std::uint32_t>(t) << 8 | static_cast<std::uint32_t>(b);
  }
  Terms<BigInt> compute(int s, int c, int t, int b);
  Terms<BigInt> adjoint(int s, int c, int t);

  std::shared_ptr<const PbwLayout> layout_;
  std::unique_ptr<Straightener<IntegerRing>> engine_;
  std::unordered_map<std::uint32_t, Terms<BigInt>> cache_;
  std::unordered_set<std::uint32_t> in_progress_;
};

/// Right multiplication of normal monomials by single factors, memoized, over
/// any coefficient ring; products of elements reduce to it factor by factor.
template <class Ring>
class Straightener {
 public:
  using V = typename Ring::value_type;
  using TermsPtr = std::shared_ptr<const Terms<V>>;

  static constexpr std::size_t kDefaultMemoTerms = std::size_t{1} << 23;

  Straightener(std::shared_ptr<const PbwLayout> layout, PairTable* table, Ring ring = {},
               std::size_t memo_terms = kDefaultMemoTerms)
      : layout_(std::move(layout)), table_(table), ring_(ring), binom_(ring), memo_cap_(memo_terms) {}

  const Ring& ring() const { return ring_; }
  const PbwLayout& layout() const { return *layout_; }
  std::size_t memo_size() const { return memo_.size(); }
  void clear_memo() {
    memo_.clear();
    memo_terms_ = 0;
  }

  /// m * F_t(n) in normal form, for a normal monomial m.
  TermsPtr mul_right(const Monomial& m, int t, int n) {
    if (n == 0) return single(m, ring_.one());
    const int s = layout_->last_slot(m);
    if (s < t) {
      Monomial r = m;
      r[static_cast<std::size_t>(t)] = static_cast<std::uint8_t>(n);
      return single(r, ring_.one());
    }
    if (s == t) return merge(m, t, n);
    const MemoKey key{m, static_cast<std::uint8_t>(t), static_cast<std::uint8_t>(n)};
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    Monomial prefix = m;
    const int c = prefix[static_cast<std::size_t>(s)];
    prefix[static_cast<std::size_t>(s)] = 0;
    const Terms<V>& g = pair(s, c, t, n);
    Accumulator<Ring> acc(ring_);
    for (const auto& [gm, coef] : g) {
      Terms<V> cur{{prefix, ring_.one()}};
      for (int u = 0; u < layout_->num_slots(); ++u)
        if (gm[static_cast<std::size_t>(u)]) cur = mul_terms_right(cur, u, gm[static_cast<std::size_t>(u)]);
      acc.add_scaled(cur, coef);
    }
    auto result = std::make_shared<const Terms<V>>(acc.take());
    if (memo_terms_ + result->size() > memo_cap_) clear_memo();
    memo_terms_ += result->size() + 1;
    memo_.emplace(key, result);
    return result;
  }

  Terms<V> mul_terms_right(const Terms<V>& x, int t, int n) {
    if (x.size() == 1 && x.front().second == ring_.one()) return *mul_right(x.front().first, t, n);
    Accumulator<Ring> acc(ring_);
    for (const auto& [m, v] : x) acc.add_scaled(*mul_right(m, t, n), v);
    return acc.take();
  }

  Terms<V> multiply_monomials(const Monomial& a, const Monomial& b) {
    Terms<V> cur{{a, ring_.one()}};
    for (int u = 0; u < layout_->num_slots(); ++u)
      if (b[static_cast<std::size_t>(u)]) cur = mul_terms_right(cur, u, b[static_cast<std::size_t>(u)]);
    return cur;
  }

  Terms<V> multiply(const Terms<V>& x, const Terms<V>& y) {
    Accumulator<Ring> acc(ring_);
    for (const auto& [b, vb] : y) {
      Terms<V> cur = x;
      for (int u = 0; u < layout_->num_slots() && !cur.empty(); ++u)
        if (b[static_cast<std::size_t>(u)]) cur = mul_terms_right(cur, u, b[static_cast<std::size_t>(u)]);
      acc.add_scaled(cur, vb);
    }
    return acc.take();
  }

  /// F_s(c) F_t(b) for s > t, in this ring.
  const Terms<V>& pair(int s, int c, int t, int b) {
    if constexpr (std::is_same_v<Ring, IntegerRing>) {
      return table_->get(s, c, t, b);
    } else {
      const std::uint32_t k = static_cast<std::uint32_t>(s) << 24 | static_cast<std::uint32_t>(c) << 16 |
                              static_cast<std::uint32_t>(t) << 8 | static_cast<std::uint32_t>(b);
      if (auto it = pairs_.find(k); it != pairs_.end()) return it->second;
      Terms<V> conv;
      for (const auto& [m, v] : table_->get(s, c, t, b)) {
        V x = ring_.from_big(v);
        if (!ring_.is_zero(x)) conv.emplace_back(m, std::move(x));
      }
      return pairs_.emplace(k, std::move(conv)).first->second;
    }
  }

 private:
  struct MemoKey {
    Monomial m;
    std::uint8_t t;
    std::uint8_t n;
    bool operator==(const MemoKey&) const = default;
  };
  struct MemoHash {
    std::size_t operator()(const MemoKey& k) const noexcept {
      return MonomialHash{}(k.m) ^ (static_cast<std::size_t>(k.t) * 0x9e3779b97f4a7c15ULL) ^
             (static_cast<std::size_t>(k.n) << 17);
    }
  };

  TermsPtr single(const Monomial& m, const V& v) {
    return std::make_shared<const Terms<V>>(Terms<V>{{m, v}});
  }

  TermsPtr merge(const Monomial& m, int t, int n) {
    const int a = m[static_cast<std::size_t>(t)];
    if (layout_->slot(t).kind != SlotKind::kH) {
      if (a + n > 255) throw std::overflow_error("divided power exponent above 255");
      Monomial r = m;
      r[static_cast<std::size_t>(t)] = static_cast<std::uint8_t>(a + n);
      V coef = binom_(a + n, n);
      if (ring_.is_zero(coef)) return std::make_shared<const Terms<V>>();
      return single(r, coef);
    }
    // (h choose a)(h choose n) = sum_k C(k, a) C(a, k - n) (h choose k)
    if (a + n > 255) throw std::overflow_error("binomial index above 255");
    Terms<V> out;
    for (int k = std::max(a, n); k <= a + n; ++k) {
      V coef = ring_.mul(binom_(k, a), binom_(a, k - n));
      if (ring_.is_zero(coef)) continue;
      Monomial r = m;
      r[static_cast<std::size_t>(t)] = static_cast<std::uint8_t>(k);
      out.emplace_back(r, coef);
    }
    return std::make_shared<const Terms<V>>(std::move(out));
  }

  std::shared_ptr<const PbwLayout> layout_;
  PairTable* table_;
  Ring ring_;
  BinomialTable<Ring> binom_;
  std::size_t memo_cap_;
  std::size_t memo_terms_ = 0;
  std::unordered_map<MemoKey, TermsPtr, MemoHash> memo_;
  std::unordered_map<std::uint32_t, Terms<V>> pairs_;
};

inline PairTable::PairTable(std::shared_ptr<const PbwLayout> layout)
    : layout_(std::move(layout)),
      engine_(std::make_unique<Straightener<IntegerRing>>(layout_, this, IntegerRing{})) {}

inline PairTable::~PairTable() = default;

inline const Terms<BigInt>& PairTable::get(int s, int c, int t, int b) {
  if (s <= t) throw std::logic_error("pair requested in normal order");
  if (c < 1 || b < 1 || c > 255 || b > 255) throw std::out_of_range("pair exponent out of range");
  const std::uint32_t k = key(s, c, t, b);
  if (auto it = cache_.find(k); it != cache_.end()) return it->second;
  if (!in_progress_.insert(k).second) throw std::logic_error("cyclic straightening request");
  Terms<BigInt> value = compute(s, c, t, b);
  in_progress_.erase(k);
  return cache_.emplace(k, std::move(value)).first->second;
}

inline Terms<BigInt> PairTable::compute(int s, int c, int t, int b) {
  const PbwLayout& L = *layout_;
  const RootSystem& rs = L.roots();
  const Slot& S = L.slot(s);
  const Slot& T = L.slot(t);
  auto mono = [](std::initializer_list<std::pair<int, int>> parts) {
    Monomial m{};
    for (auto [slot, n] : parts)
      if (n) m[static_cast<std::size_t>(slot)] = static_cast<std::uint8_t>(n);
    return m;
  };
  Accumulator<IntegerRing> acc(IntegerRing{});

  if (S.kind == SlotKind::kH && T.kind == SlotKind::kH) {
    acc.add(mono({{t, b}, {s, c}}), 1);
    return acc.take();
  }
  if (S.kind == SlotKind::kE && T.kind == SlotKind::kH) {
    // e^(c) (h_i choose b) = sum_j C(u, b - j) (h_i choose j) e^(c), u = -c <alpha, alpha_i^vee>
    const long long u = -static_cast<long long>(c) * rs.cartan_pairing(S.root, T.index);
    for (int j = 0; j <= b; ++j) acc.add(mono({{t, j}, {s, c}}), binomial(u, b - j));
    return acc.take();
  }
  if (S.kind == SlotKind::kH && T.kind == SlotKind::kF) {
    // (h_i choose c) e_gamma^(b) = sum_j C(v, c - j) e_gamma^(b) (h_i choose j), v = b <gamma, alpha_i^vee>
    const long long v = static_cast<long long>(b) * rs.cartan_pairing(T.root, S.index);
    for (int j = 0; j <= c; ++j) acc.add(mono({{t, b}, {s, j}}), binomial(v, c - j));
    return acc.take();
  }
  if (S.kind == SlotKind::kH || T.kind == SlotKind::kH) throw std::logic_error("unexpected slot kinds in pair");

  if (b == 1) return adjoint(s, c, t);
  const Terms<BigInt> prev = get(s, c, t, b - 1);
  for (const auto& [gm, gv] : prev) acc.add_scaled(*engine_->mul_right(gm, t, 1), gv);
  Terms<BigInt> out = acc.take();
  for (auto& [m, v] : out) {
    BigInt q, r;
    boost::multiprecision::divide_qr(v, BigInt(b), q, r);
    if (r != 0)
      throw IntegralityError("non-integral coefficient while dividing by " + std::to_string(b) + " at " +
                             L.to_string(m));
    v = q;
  }
  return out;
}

// e_y^(c) x = sum_k ((ad e_y)^k x / k!) e_y^(c-k) for a single root vector x.
inline Terms<BigInt> PairTable::adjoint(int s, int c, int t) {
  const PbwLayout& L = *layout_;
  const StructureConstants& sc = L.constants();
  const int y = L.slot(s).root;
  Accumulator<IntegerRing> acc(IntegerRing{});
  auto combine = [&](int u, long long lambda, int d) {
    if (u < 0) throw std::logic_error("bracket leaves the ambient mode");
    Monomial m{};
    if (d == 0) {
      m[static_cast<std::size_t>(u)] = 1;
      acc.add(m, lambda);
    } else if (u < s) {
      m[static_cast<std::size_t>(u)] = 1;
      m[static_cast<std::size_t>(s)] = static_cast<std::uint8_t>(d);
      acc.add(m, lambda);
    } else if (u == s) {
      m[static_cast<std::size_t>(s)] = static_cast<std::uint8_t>(d + 1);
      acc.add(m, BigInt(lambda) * (d + 1));
    } else {
      acc.add_scaled(get(u, 1, s, d), BigInt(lambda));
    }
  };
  LieElement x = sc.e(L.slot(t).root);
  const LieElement ey = sc.e(y);
  for (int k = 0; k <= c; ++k) {
    if (k > 0) {
      x = bracket(sc, ey, x);
      for (auto& [id, v] : x.e_coeffs) {
        if (v % k != 0) throw IntegralityError("non-integral divided adjoint power");
        v /= k;
      }
      for (auto& v : x.h_coeffs) {
        if (v % k != 0) throw IntegralityError("non-integral divided adjoint power");
        v /= k;
      }
    }
    if (x.is_zero()) break;
    const int d = c - k;
    for (auto [id, v] : x.e_coeffs) combine(L.slot_of_root(id), v, d);
    for (int i = 0; i < L.roots().rank(); ++i)
      if (x.h_coeffs[static_cast<std::size_t>(i)]) combine(L.h_slot(i), x.h_coeffs[static_cast<std::size_t>(i)], d);
  }
  return acc.take();
}

}  // namespace hyperalg
