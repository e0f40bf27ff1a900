#pragma once

#include <string>
#include <vector>

#include "hyperalg/exponent_table.hpp"
#include "hyperalg/subspace.hpp"

namespace hyperalg {

inline int ipow(int p, int k) {
  int v = 1;
  for (int i = 0; i < k; ++i) v *= p;
  return v;
}

/// Label such as "e[a1+a2]^(4)" or "f[a2]^(1)".
inline std::string root_power_label(const RootSystem& rs, int root_id, int n) {
  const bool pos = rs.is_positive(root_id);
  const int base = pos ? root_id : rs.negate(root_id);
  return std::string(pos ? "e[" : "f[") + coords_label(rs.root(base).coords) + "]^(" + std::to_string(n) + ")";
}

inline Generator root_power(const Algebra<PrimeField>& alg, int root_id, int n) {
  return {root_power_label(alg.layout().roots(), root_id, n), alg.root_vector(root_id, n)};
}

/// e_i^(p^s) for simple i and 0 <= s < r; the unit is implicit in every closure.
inline GeneratorSet lambda_plus(const Algebra<PrimeField>& alg, int r) {
  const int p = static_cast<int>(alg.ring().p);
  GeneratorSet out;
  for (int s = 0; s < r; ++s)
    for (int i = 0; i < alg.layout().roots().rank(); ++i) out.push_back(root_power(alg, i, ipow(p, s)));
  return out;
}

inline GeneratorSet lambda_minus(const Algebra<PrimeField>& alg, int r) {
  const int p = static_cast<int>(alg.ring().p);
  const RootSystem& rs = alg.layout().roots();
  GeneratorSet out;
  for (int s = 0; s < r; ++s)
    for (int i = 0; i < rs.rank(); ++i) out.push_back(root_power(alg, rs.negate(i), ipow(p, s)));
  return out;
}

inline GeneratorSet lambda_full(const Algebra<PrimeField>& alg, int r) {
  GeneratorSet out = lambda_plus(alg, r);
  for (auto& g : lambda_minus(alg, r)) out.push_back(std::move(g));
  return out;
}

/// e_theta^(p^(r-1)) (positive) or f_theta^(p^(r-1)) (negative) for theta in the table.
inline GeneratorSet theta_generators(const Algebra<PrimeField>& alg, const ExponentTable& table, bool positive) {
  GeneratorSet out;
  if (table.r < 1) return out;
  const RootSystem& rs = alg.layout().roots();
  const int n = ipow(table.p, table.r - 1);
  for (int id : table.theta) out.push_back(root_power(alg, positive ? id : rs.negate(id), n));
  return out;
}

/// Generators for the mode of the algebra: Lambda_r^+, Lambda_r^- or Lambda_r,
/// optionally with the matching Theta generators.
inline GeneratorSet standard_generators(const Algebra<PrimeField>& alg, int r, const ExponentTable* table = nullptr) {
  GeneratorSet out;
  switch (alg.layout().mode()) {
    case Mode::kPlus: out = lambda_plus(alg, r); break;
    case Mode::kMinus: out = lambda_minus(alg, r); break;
    case Mode::kFull: out = lambda_full(alg, r); break;
  }
  if (table) {
    if (alg.layout().mode() != Mode::kMinus)
      for (auto& g : theta_generators(alg, *table, true)) out.push_back(std::move(g));
    if (alg.layout().mode() != Mode::kPlus)
      for (auto& g : theta_generators(alg, *table, false)) out.push_back(std::move(g));
  }
  return out;
}

/// Per-slot exponent bounds p^(a_alpha) - 1 on e/f slots and p^r - 1 on h slots.
inline std::vector<int> table_bounds(const PbwLayout& L, const ExponentTable& table) {
  std::vector<int> b(static_cast<std::size_t>(L.num_slots()));
  for (int s = 0; s < L.num_slots(); ++s) {
    const Slot& sl = L.slot(s);
    if (sl.kind == SlotKind::kH) {
      b[static_cast<std::size_t>(s)] = ipow(table.p, table.r) - 1;
    } else {
      const int id = L.roots().is_positive(sl.root) ? sl.root : L.roots().negate(sl.root);
      b[static_cast<std::size_t>(s)] = ipow(table.p, table.a_map[static_cast<std::size_t>(id)]) - 1;
    }
  }
  return b;
}

/// Monomials with exponents below p^(a_alpha) (and below p^r on h slots).
inline std::vector<Monomial> table_basis(const std::shared_ptr<const PbwLayout>& L, const ExponentTable& table) {
  const AmbientBox box(L, static_cast<std::uint32_t>(table.p), table.r, table_bounds(*L, table));
  std::vector<Monomial> out;
  box.for_each_monomial([&](const Monomial& m) { out.push_back(m); });
  return out;
}

}  // namespace hyperalg
