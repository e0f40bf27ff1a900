#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "hyperalg/algebra.hpp"

namespace hyperalg {

/// Outcome of a batch of support-shape checks on commutators in U_Z^+.
struct ShapeReport {
  long long products = 0;
  long long terms = 0;
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
};

namespace detail {

inline int exp_at(const PbwLayout& L, const Monomial& m, int k) { return m[static_cast<std::size_t>(L.e_slot(k))]; }

inline bool supported_in(const PbwLayout& L, const Monomial& m, int lo, int hi) {
  for (int k = 0; k < L.roots().num_positive(); ++k)
    if ((k < lo || k > hi) && exp_at(L, m, k)) return false;
  return true;
}

inline int window_sum(const PbwLayout& L, const Monomial& m, int lo, int hi) {
  int s = 0;
  for (int k = lo; k <= hi; ++k) s += exp_at(L, m, k);
  return s;
}

inline Monomial e_monomial(const PbwLayout& L, std::initializer_list<std::pair<int, int>> parts) {
  Monomial m{};
  for (auto [k, n] : parts)
    if (n) m[static_cast<std::size_t>(L.e_slot(k))] = static_cast<std::uint8_t>(n);
  return m;
}

}  // namespace detail

/// Support bounds for [e_k^(a), e_j^(b)] and the one-sided window commutators,
/// over every pair j < k of convex positions and 1 <= a, b <= max_exp. The
/// window commutators use `window_samples` random exponent vectors per pair.
inline ShapeReport check_commutator_shapes(Algebra<IntegerRing>& alg, int max_exp, int window_samples,
                                           std::uint64_t seed = 1) {
  const PbwLayout& L = alg.layout();
  if (L.mode() != Mode::kPlus) throw std::invalid_argument("shape checks need the plus ambient");
  const int nu = L.roots().num_positive();
  ShapeReport rep;
  std::mt19937_64 rng(seed);
  auto fail = [&](const std::string& what, const Monomial& m) {
    if (rep.violations.size() < 50) rep.violations.push_back(what + ": " + L.to_string(m));
  };
  auto label = [](const char* tag, int j, int k, int a, int b) {
    return std::string(tag) + " j=" + std::to_string(j + 1) + " k=" + std::to_string(k + 1) + " a=" +
           std::to_string(a) + " b=" + std::to_string(b);
  };

  for (int j = 0; j < nu; ++j) {
    for (int k = j + 1; k < nu; ++k) {
      const int beta_j = L.order().root_at(j), beta_k = L.order().root_at(k);
      for (int a = 1; a <= max_exp; ++a) {
        for (int b = 1; b <= max_exp; ++b) {
          const auto ek = alg.e(k, a), ej = alg.e(j, b);
          const auto d = alg.commutator(ek, ej);
          ++rep.products;
          const std::string tag = label("two-power", j, k, a, b);
          for (const auto& [m, v] : d.terms) {
            ++rep.terms;
            if (!detail::supported_in(L, m, j, k)) fail(tag + " support", m);
            if (detail::exp_at(L, m, j) >= b || detail::exp_at(L, m, k) >= a) fail(tag + " end exponent", m);
            if (detail::window_sum(L, m, j, k - 1) > b || detail::window_sum(L, m, j + 1, k) > a)
              fail(tag + " window sum", m);
            for (int s = j + 1; s < k; ++s) {
              const int as = detail::exp_at(L, m, s);
              if (as == b && m != detail::e_monomial(L, {{s, b}, {k, detail::exp_at(L, m, k)}}))
                fail(tag + " collapse on b", m);
              if (as == a && m != detail::e_monomial(L, {{j, detail::exp_at(L, m, j)}, {s, a}}))
                fail(tag + " collapse on a", m);
              if (a == b && as == a) {
                const auto sum = L.roots().add(L.roots().root(beta_j).coords, L.roots().root(beta_k).coords);
                if (m != detail::e_monomial(L, {{s, a}}) || L.roots().root(L.order().root_at(s)).coords != sum)
                  fail(tag + " collapse on a=b", m);
              }
            }
          }
          if (a == 1 || b == 1) {
            const std::string one = label(a == 1 ? "left-single" : "right-single", j, k, a, b);
            if (k - j == 1 && !d.is_zero()) fail(one + " adjacent nonzero", PbwLayout::unit());
            for (const auto& [m, v] : d.terms) {
              bool shaped = false;
              for (int s = j + 1; s < k && !shaped; ++s) {
                if (a == 1)
                  shaped = detail::exp_at(L, m, s) == 1 && m == detail::e_monomial(L, {{j, detail::exp_at(L, m, j)}, {s, 1}}) &&
                           detail::exp_at(L, m, j) < b;
                if (!shaped && b == 1)
                  shaped = detail::exp_at(L, m, s) == 1 && m == detail::e_monomial(L, {{s, 1}, {k, detail::exp_at(L, m, k)}}) &&
                           detail::exp_at(L, m, k) < a;
              }
              if (!shaped) fail(one + " shape", m);
            }
          }
        }
      }

      std::uniform_int_distribution<int> pick(0, max_exp);
      for (int sample = 0; sample < window_samples; ++sample) {
        std::vector<int> ex(static_cast<std::size_t>(k - j + 1));
        for (auto& x : ex) x = pick(rng);
        auto at = [&](int i) { return ex[static_cast<std::size_t>(i - j)]; };
        Monomial left{}, right{};
        for (int i = j; i < k; ++i) left[static_cast<std::size_t>(L.e_slot(i))] = static_cast<std::uint8_t>(at(i));
        for (int i = j + 1; i <= k; ++i) right[static_cast<std::size_t>(L.e_slot(i))] = static_cast<std::uint8_t>(at(i));
        int left_total = 0, left_inner = 0, right_total = 0, right_inner = 0;
        for (int i = j; i < k; ++i) left_total += at(i);
        for (int i = j + 1; i < k; ++i) left_inner += at(i);
        for (int i = j + 1; i <= k; ++i) right_total += at(i);
        right_inner = left_inner;

        const auto x = alg.monomial(left);
        const auto dl = alg.commutator(alg.e(k), x);
        ++rep.products;
        const std::string tl = label("left-window", j, k, 1, 0);
        for (const auto& [m, v] : dl.terms) {
          ++rep.terms;
          if (!detail::supported_in(L, m, j, k - 1)) fail(tl + " support", m);
          if (detail::exp_at(L, m, j) > at(j)) fail(tl + " first exponent", m);
          if (detail::window_sum(L, m, j, k - 1) > left_total) fail(tl + " total", m);
          if (k - j >= 2 && detail::window_sum(L, m, j + 1, k - 1) > left_inner + 1) fail(tl + " inner", m);
        }

        const auto y = alg.monomial(right);
        const auto dr = alg.commutator(y, alg.e(j));
        ++rep.products;
        const std::string tr = label("right-window", j, k, 0, 1);
        for (const auto& [m, v] : dr.terms) {
          ++rep.terms;
          if (!detail::supported_in(L, m, j + 1, k)) fail(tr + " support", m);
          if (detail::exp_at(L, m, k) > at(k)) fail(tr + " last exponent", m);
          if (detail::window_sum(L, m, j + 1, k) > right_total) fail(tr + " total", m);
          if (k - j >= 2 && detail::window_sum(L, m, j + 1, k - 1) > right_inner + 1) fail(tr + " inner", m);
        }
      }
    }
  }
  return rep;
}

/// Closed forms in type G2 for e_1^(a) e_2^(b), e_1^(a) e_112^(b) and
/// e_1112^(a) e_2^(b). Returns the (a, b, form) labels that disagree.
inline std::vector<std::string> check_g2_closed_forms(Algebra<IntegerRing>& alg, int max_exp) {
  const PbwLayout& L = alg.layout();
  const RootSystem& rs = L.roots();
  if (rs.type().letter != 'G' || L.mode() != Mode::kPlus) throw std::invalid_argument("G2 plus ambient required");
  auto root = [&](int c1, int c2) { return rs.id_of(Coords{c1, c2}); };
  const int e1 = root(1, 0), e2 = root(0, 1), e12 = root(1, 1), e112 = root(2, 1), e1112 = root(3, 1),
            e11122 = root(3, 2);
  auto product = [&](std::initializer_list<std::pair<int, int>> factors, long long coef) {
    auto acc = alg.unit();
    for (auto [id, n] : factors)
      if (n) acc = alg.multiply(acc, alg.root_vector(id, n));
    return acc.scaled(BigInt(coef));
  };
  std::vector<std::string> bad;
  for (int a = 1; a <= max_exp; ++a) {
    for (int b = 1; b <= max_exp; ++b) {
      auto rhs1 = alg.zero();
      for (int t3 = 0; 2 * t3 <= b && 3 * t3 <= a; ++t3)
        for (int t5 = 0; 2 * t3 + t5 <= b && 3 * t3 + 3 * t5 <= a; ++t5)
          for (int t4 = 0; 2 * t3 + t4 + t5 <= b && 3 * t3 + 2 * t4 + 3 * t5 <= a; ++t4)
            for (int t2 = 0; 2 * t3 + t2 + t4 + t5 <= b && t2 + 3 * t3 + 2 * t4 + 3 * t5 <= a; ++t2) {
              const int t1 = b - t2 - 2 * t3 - t4 - t5;
              const int t6 = a - t2 - 3 * t3 - 2 * t4 - 3 * t5;
              rhs1 = rhs1 + product({{e2, t1}, {e12, t2}, {e11122, t3}, {e112, t4}, {e1112, t5}, {e1, t6}}, 1);
            }
      if (!(alg.multiply(alg.root_vector(e1, a), alg.root_vector(e2, b)) == rhs1))
        bad.push_back("e1^(a) e2^(b) a=" + std::to_string(a) + " b=" + std::to_string(b));

      auto rhs2 = alg.zero(), rhs3 = alg.zero();
      for (int t2 = 0; t2 <= a && t2 <= b; ++t2) {
        long long pow3 = 1;
        for (int i = 0; i < t2; ++i) pow3 *= 3;
        rhs2 = rhs2 + product({{e112, b - t2}, {e1112, t2}, {e1, a - t2}}, pow3);
        rhs3 = rhs3 + product({{e2, b - t2}, {e11122, t2}, {e1112, a - t2}}, t2 % 2 ? -1 : 1);
      }
      if (!(alg.multiply(alg.root_vector(e1, a), alg.root_vector(e112, b)) == rhs2))
        bad.push_back("e1^(a) e112^(b) a=" + std::to_string(a) + " b=" + std::to_string(b));
      if (!(alg.multiply(alg.root_vector(e1112, a), alg.root_vector(e2, b)) == rhs3))
        bad.push_back("e1112^(a) e2^(b) a=" + std::to_string(a) + " b=" + std::to_string(b));
    }
  }
  return bad;
}

}  // namespace hyperalg
