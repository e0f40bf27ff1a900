#pragma once

#include <deque>
#include <memory>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "hyperalg/algebra.hpp"

namespace hyperalg {

/// Element over ordinary PBW monomials f^A h^B e^C (plain powers), rational coefficients.
struct OrdinaryElement {
  std::shared_ptr<const PbwLayout> layout;
  Terms<BigRational> terms;

  bool operator==(const OrdinaryElement& o) const { return terms == o.terms; }
};

namespace detail {

// s(n, k): signed Stirling numbers of the first kind, x(x-1)...(x-n+1) = sum_k s(n,k) x^k
inline const std::vector<BigInt>& stirling1_row(int n) {
  static std::deque<std::vector<BigInt>> rows{{1}};
  while (static_cast<int>(rows.size()) <= n) {
    const auto m = rows.size();
    std::vector<BigInt> row(m + 1, 0);
    for (std::size_t k = 1; k <= m; ++k)
      row[k] = (k - 1 < rows[m - 1].size() ? rows[m - 1][k - 1] : BigInt(0)) -
               BigInt(static_cast<long long>(m - 1)) * (k < rows[m - 1].size() ? rows[m - 1][k] : BigInt(0));
    rows.push_back(std::move(row));
  }
  return rows[static_cast<std::size_t>(n)];
}

// S(n, k): Stirling numbers of the second kind
inline const std::vector<BigInt>& stirling2_row(int n) {
  static std::deque<std::vector<BigInt>> rows{{1}};
  while (static_cast<int>(rows.size()) <= n) {
    const auto m = rows.size();
    std::vector<BigInt> row(m + 1, 0);
    for (std::size_t k = 1; k <= m; ++k)
      row[k] = (k - 1 < rows[m - 1].size() ? rows[m - 1][k - 1] : BigInt(0)) +
               BigInt(static_cast<long long>(k)) * (k < rows[m - 1].size() ? rows[m - 1][k] : BigInt(0));
    rows.push_back(std::move(row));
  }
  return rows[static_cast<std::size_t>(n)];
}

// Expand a monomial slot by slot; per_slot(s, n) gives the one-slot expansion as (exponent, coefficient).
template <class F>
Terms<BigRational> expand_slots(const PbwLayout& L, const Monomial& m, const BigRational& coef, F per_slot) {
  Terms<BigRational> cur{{Monomial{}, coef}};
  for (int s = 0; s < L.num_slots(); ++s) {
    const int n = m[static_cast<std::size_t>(s)];
    if (!n) continue;
    const auto options = per_slot(s, n);
    Terms<BigRational> next;
    for (const auto& [pm, pv] : cur)
      for (const auto& [k, kv] : options) {
        if (kv == 0) continue;
        Monomial q = pm;
        q[static_cast<std::size_t>(s)] = static_cast<std::uint8_t>(k);
        next.emplace_back(q, pv * kv);
      }
    cur = std::move(next);
  }
  return cur;
}

}  // namespace detail

/// Divided-power basis to ordinary basis: e^(a) = e^a / a!, (h choose n) = sum_k s(n,k) h^k / n!.
template <class Ring>
OrdinaryElement to_ordinary(const Element<Ring>& x) {
  const PbwLayout& L = *x.layout;
  Accumulator<RationalField> acc(RationalField{});
  for (const auto& [m, v] : x.terms) {
    BigRational c;
    if constexpr (std::is_same_v<Ring, RationalField>) c = v;
    else if constexpr (std::is_same_v<Ring, IntegerRing>) c = BigRational(v);
    else static_assert(std::is_same_v<Ring, RationalField>, "characteristic zero only");
    auto parts = detail::expand_slots(L, m, c, [&](int s, int n) {
      std::vector<std::pair<int, BigRational>> out;
      const BigRational inv_fact = BigRational(1) / BigRational(factorial(n));
      if (L.slot(s).kind != SlotKind::kH) {
        out.emplace_back(n, inv_fact);
      } else {
        const auto& row = detail::stirling1_row(n);
        for (int k = 0; k <= n; ++k) out.emplace_back(k, BigRational(row[static_cast<std::size_t>(k)]) * inv_fact);
      }
      return out;
    });
    for (const auto& [pm, pv] : parts) acc.add(pm, pv);
  }
  return {x.layout, acc.take()};
}

/// Ordinary basis to divided-power basis: e^a = a! e^(a), h^k = sum_j S(k,j) j! (h choose j).
inline Element<RationalField> to_divided(const OrdinaryElement& x) {
  const PbwLayout& L = *x.layout;
  Accumulator<RationalField> acc(RationalField{});
  for (const auto& [m, v] : x.terms) {
    auto parts = detail::expand_slots(L, m, v, [&](int s, int n) {
      std::vector<std::pair<int, BigRational>> out;
      if (L.slot(s).kind != SlotKind::kH) {
        out.emplace_back(n, BigRational(factorial(n)));
      } else {
        const auto& row = detail::stirling2_row(n);
        for (int j = 0; j <= n; ++j) out.emplace_back(j, BigRational(row[static_cast<std::size_t>(j)] * factorial(j)));
      }
      return out;
    });
    for (const auto& [pm, pv] : parts) acc.add(pm, pv);
  }
  return {x.layout, RationalField{}, acc.take()};
}

/// Throws IntegralityError on a denominator.
inline Element<IntegerRing> require_integral(const Element<RationalField>& x) {
  Element<IntegerRing> out{x.layout, IntegerRing{}, {}};
  for (const auto& [m, v] : x.terms) {
    if (denominator(v) != 1)
      throw IntegralityError("coefficient " + v.str() + " of " + x.layout->to_string(m) + " is not an integer");
    out.terms.emplace_back(m, numerator(v));
  }
  return out;
}

/// Straightening of ordinary PBW monomials with y^c x = sum_k C(c,k) (ad y)^k(x) y^(c-k).
class OrdinaryPbw {
 public:
  explicit OrdinaryPbw(std::shared_ptr<const PbwLayout> layout) : layout_(std::move(layout)) {}

  const std::shared_ptr<const PbwLayout>& layout_ptr() const { return layout_; }

  OrdinaryElement multiply(const OrdinaryElement& x, const OrdinaryElement& y) {
    Accumulator<RationalField> acc(RationalField{});
    for (const auto& [b, vb] : y.terms) {
      Terms<BigRational> cur = x.terms;
      for (int u = 0; u < layout_->num_slots(); ++u)
        if (b[static_cast<std::size_t>(u)]) cur = mul_terms_right(cur, u, b[static_cast<std::size_t>(u)]);
      acc.add_scaled(cur, vb);
    }
    return {layout_, acc.take()};
  }

  /// Product of divided-power elements computed through the ordinary basis.
  template <class Ring>
  Element<RationalField> multiply_divided(const Element<Ring>& x, const Element<Ring>& y) {
    return to_divided(multiply(to_ordinary(x), to_ordinary(y)));
  }

 private:
  Terms<BigRational> mul_terms_right(const Terms<BigRational>& x, int t, int n) {
    Accumulator<RationalField> acc(RationalField{});
    for (const auto& [m, v] : x) acc.add_scaled(mul_right(m, t, n), v);
    return acc.take();
  }

  Terms<BigRational> mul_right(const Monomial& m, int t, int n) {
    const int s = layout_->last_slot(m);
    if (s <= t) {
      Monomial r = m;
      if (r[static_cast<std::size_t>(t)] + n > 255) throw std::overflow_error("power above 255");
      r[static_cast<std::size_t>(t)] = static_cast<std::uint8_t>(r[static_cast<std::size_t>(t)] + n);
      return {{r, BigRational(1)}};
    }
    const Key key{m, t, n};
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    Monomial prefix = m;
    const int c = prefix[static_cast<std::size_t>(s)];
    prefix[static_cast<std::size_t>(s)] = 0;
    Accumulator<RationalField> acc(RationalField{});
    for (const auto& [gm, gv] : pair(s, c, t, n)) {
      Terms<BigRational> cur{{prefix, BigRational(1)}};
      for (int u = 0; u < layout_->num_slots(); ++u)
        if (gm[static_cast<std::size_t>(u)]) cur = mul_terms_right(cur, u, gm[static_cast<std::size_t>(u)]);
      acc.add_scaled(cur, gv);
    }
    return memo_.emplace(key, acc.take()).first->second;
  }

  // x_s^c x_t^b, s > t
  Terms<BigRational> pair(int s, int c, int t, int b) {
    const PbwLayout& L = *layout_;
    Accumulator<RationalField> acc(RationalField{});
    auto mono = [](std::initializer_list<std::pair<int, int>> parts) {
      Monomial m{};
      for (auto [slot, n] : parts) m[static_cast<std::size_t>(slot)] = static_cast<std::uint8_t>(n);
      return m;
    };
    if (b > 1) {
      for (const auto& [gm, gv] : pair(s, c, t, b - 1)) acc.add_scaled(mul_right(gm, t, 1), gv);
      return acc.take();
    }
    const Slot& S = L.slot(s);
    const Slot& T = L.slot(t);
    if (S.kind == SlotKind::kH && T.kind == SlotKind::kH) {
      acc.add(mono({{t, 1}, {s, c}}), 1);
    } else if (S.kind == SlotKind::kE && T.kind == SlotKind::kH) {
      // y^c h = (h - c <alpha, alpha_i^vee>) y^c
      acc.add(mono({{t, 1}, {s, c}}), 1);
      acc.add(mono({{s, c}}), BigRational(-c * L.roots().cartan_pairing(S.root, T.index)));
    } else if (S.kind == SlotKind::kH && T.kind == SlotKind::kF) {
      // h^c x = x (h + v)^c
      const long long v = L.roots().cartan_pairing(T.root, S.index);
      for (int j = 0; j <= c; ++j) {
        BigInt pw = 1;
        for (int k = 0; k < c - j; ++k) pw *= v;
        acc.add(mono({{t, 1}, {s, j}}), BigRational(binomial(c, j) * pw));
      }
    } else {
      const StructureConstants& sc = L.constants();
      const LieElement ey = sc.e(S.root);
      LieElement x = sc.e(T.root);
      for (int k = 0; k <= c && !x.is_zero(); ++k) {
        if (k > 0) x = bracket(sc, ey, x);
        if (x.is_zero()) break;
        const BigInt ck = binomial(c, k);
        const int d = c - k;
        auto combine = [&](int u, long long lambda) {
          if (u < 0) throw std::logic_error("bracket leaves the ambient mode");
          const BigRational coef = BigRational(ck * lambda);
          if (d == 0) acc.add(mono({{u, 1}}), coef);
          else if (u < s) acc.add(mono({{u, 1}, {s, d}}), coef);
          else if (u == s) acc.add(mono({{s, d + 1}}), coef);
          else acc.add_scaled(pair(u, 1, s, d), coef);
        };
        for (auto [id, v] : x.e_coeffs) combine(L.slot_of_root(id), v);
        for (int i = 0; i < L.roots().rank(); ++i)
          if (x.h_coeffs[static_cast<std::size_t>(i)]) combine(L.h_slot(i), x.h_coeffs[static_cast<std::size_t>(i)]);
      }
    }
    return acc.take();
  }

  struct Key {
    Monomial m;
    int t;
    int n;
    bool operator==(const Key&) const = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const noexcept {
      return MonomialHash{}(k.m) ^ (static_cast<std::size_t>(k.t) << 40) ^ static_cast<std::size_t>(k.n);
    }
  };

  std::shared_ptr<const PbwLayout> layout_;
  std::unordered_map<Key, Terms<BigRational>, KeyHash> memo_;
};

}  // namespace hyperalg
