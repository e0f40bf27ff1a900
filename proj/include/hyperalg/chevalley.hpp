#pragma once

#include <array>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hyperalg/root_system.hpp"

namespace hyperalg {

/// Element of the Chevalley lattice: integer combination of e_alpha and h_i.
struct LieElement {
  std::map<int, long long> e_coeffs;  // root id -> coefficient
  std::vector<long long> h_coeffs;    // over h_1..h_l

  bool is_zero() const {
    if (!e_coeffs.empty()) return false;
    for (auto v : h_coeffs)
      if (v != 0) return false;
    return true;
  }
  friend bool operator==(const LieElement& a, const LieElement& b) {
    return a.e_coeffs == b.e_coeffs && a.h_coeffs == b.h_coeffs;
  }
};

/// Signed structure constants of a Chevalley basis: [e_a, e_b] = N_{a,b} e_{a+b}
/// and [e_a, e_{-a}] = h_a, where h_a is the coroot written over h_1..h_l.
class StructureConstants {
 public:
  const RootSystem& roots() const { return rs_; }
  int n(int a, int b) const { return n_table_[static_cast<std::size_t>(a * width_ + b)]; }
  /// Sum root id of a and b, or -1 when a+b is not a root.
  int sum(int a, int b) const { return sum_table_[static_cast<std::size_t>(a * width_ + b)]; }
  const std::vector<int>& cartan(int id) const { return rs_.coroot(id); }

  LieElement e(int id) const {
    LieElement x;
    x.h_coeffs.assign(static_cast<std::size_t>(rs_.rank()), 0);
    x.e_coeffs[id] = 1;
    return x;
  }
  LieElement h(int i) const {
    LieElement x;
    x.h_coeffs.assign(static_cast<std::size_t>(rs_.rank()), 0);
    x.h_coeffs[static_cast<std::size_t>(i)] = 1;
    return x;
  }
  LieElement zero() const {
    LieElement x;
    x.h_coeffs.assign(static_cast<std::size_t>(rs_.rank()), 0);
    return x;
  }

  /// CSV rows alpha_id,beta_id,N over all pairs with N != 0.
  std::string to_csv() const {
    std::ostringstream os;
    os << "alpha_id,beta_id,N\n";
    for (int a = 0; a < width_; ++a)
      for (int b = 0; b < width_; ++b)
        if (n(a, b) != 0) os << a << ',' << b << ',' << n(a, b) << '\n';
    return os.str();
  }

 private:
  friend StructureConstants build_structure_constants(const RootSystem& rs);
  friend void rescale(StructureConstants& sc, const std::vector<int>& eps);

  RootSystem rs_;
  int width_ = 0;
  std::vector<std::int8_t> n_table_;
  std::vector<int> sum_table_;
};

inline LieElement bracket(const StructureConstants& sc, const LieElement& x, const LieElement& y) {
  const RootSystem& rs = sc.roots();
  const auto l = static_cast<std::size_t>(rs.rank());
  if (x.h_coeffs.size() != l || y.h_coeffs.size() != l)
    throw std::invalid_argument("bracket of elements from different root systems");
  LieElement out = sc.zero();
  auto add_e = [&](int id, long long c) {
    if (c == 0) return;
    auto& slot = out.e_coeffs[id];
    slot += c;
    if (slot == 0) out.e_coeffs.erase(id);
  };
  for (auto [a, ca] : x.e_coeffs) {
    for (auto [b, cb] : y.e_coeffs) {
      if (b == rs.negate(a)) {
        const auto& hv = sc.cartan(a);
        for (std::size_t i = 0; i < l; ++i) out.h_coeffs[i] += ca * cb * hv[i];
      } else if (const int s = sc.sum(a, b); s >= 0) {
        add_e(s, ca * cb * sc.n(a, b));
      }
    }
    // [e_a, h] = -[h, e_a]
    long long w = 0;
    for (std::size_t i = 0; i < l; ++i) w += y.h_coeffs[i] * rs.cartan_pairing(a, static_cast<int>(i));
    add_e(a, -ca * w);
  }
  for (auto [b, cb] : y.e_coeffs) {
    long long w = 0;
    for (std::size_t i = 0; i < l; ++i) w += x.h_coeffs[i] * rs.cartan_pairing(b, static_cast<int>(i));
    add_e(b, cb * w);
  }
  return out;
}

namespace detail {

inline std::string basis_name(const RootSystem& rs, int k) {
  if (k < rs.num_roots()) return "e[" + coords_label(rs.root(k).coords) + "]";
  return "h" + std::to_string(k - rs.num_roots() + 1);
}

}  // namespace detail

/// Throws std::logic_error naming the first basis triple violating Jacobi.
inline void check_jacobi(const StructureConstants& sc) {
  const RootSystem& rs = sc.roots();
  const int dim = rs.num_roots() + rs.rank();
  std::vector<LieElement> basis;
  for (int k = 0; k < dim; ++k) basis.push_back(k < rs.num_roots() ? sc.e(k) : sc.h(k - rs.num_roots()));
  // brackets of basis pairs, reused for every triple
  std::vector<LieElement> table(static_cast<std::size_t>(dim * dim));
  for (int a = 0; a < dim; ++a)
    for (int b = 0; b < dim; ++b)
      table[static_cast<std::size_t>(a * dim + b)] = bracket(sc, basis[static_cast<std::size_t>(a)],
                                                             basis[static_cast<std::size_t>(b)]);
  const auto l = static_cast<std::size_t>(rs.rank());
  auto accumulate = [&](int a, const LieElement& inner, std::vector<long long>& acc) {
    for (auto [id, c] : inner.e_coeffs) {
      const auto& t = table[static_cast<std::size_t>(a * dim + id)];
      for (auto [id2, c2] : t.e_coeffs) acc[static_cast<std::size_t>(id2)] += c * c2;
      for (std::size_t i = 0; i < l; ++i) acc[static_cast<std::size_t>(rs.num_roots()) + i] += c * t.h_coeffs[i];
    }
    for (std::size_t i = 0; i < l; ++i) {
      if (inner.h_coeffs[i] == 0) continue;
      const auto& t = table[static_cast<std::size_t>(a * dim + rs.num_roots() + static_cast<int>(i))];
      for (auto [id2, c2] : t.e_coeffs) acc[static_cast<std::size_t>(id2)] += inner.h_coeffs[i] * c2;
    }
  };
  std::vector<long long> acc(static_cast<std::size_t>(dim));
  for (int a = 0; a < dim; ++a)
    for (int b = a + 1; b < dim; ++b)
      for (int c = b + 1; c < dim; ++c) {
        std::fill(acc.begin(), acc.end(), 0);
        accumulate(a, table[static_cast<std::size_t>(b * dim + c)], acc);
        accumulate(b, table[static_cast<std::size_t>(c * dim + a)], acc);
        accumulate(c, table[static_cast<std::size_t>(a * dim + b)], acc);
        for (long long v : acc)
          if (v != 0)
            throw std::logic_error("Jacobi identity fails on (" + detail::basis_name(rs, a) + ", " +
                                   detail::basis_name(rs, b) + ", " + detail::basis_name(rs, c) + ")");
      }
}

inline void rescale(StructureConstants& sc, const std::vector<int>& eps) {
  const int w = sc.width_;
  const int nu = sc.rs_.num_positive();
  auto sign = [&](int id) { return eps[static_cast<std::size_t>(id % nu)]; };
  for (int a = 0; a < w; ++a)
    for (int b = 0; b < w; ++b) {
      const int s = sc.sum_table_[static_cast<std::size_t>(a * w + b)];
      if (s < 0) continue;
      auto& v = sc.n_table_[static_cast<std::size_t>(a * w + b)];
      v = static_cast<std::int8_t>(v * sign(a) * sign(b) * sign(s));
    }
}

/// Chevalley basis by the extraspecial pair method: for each positive root xi
/// in order of height, its first decomposition xi = alpha + beta gets the sign
/// +(p+1); the remaining constants follow from Jacobi and
/// N_{a,b}/|c|^2 = N_{b,c}/|a|^2 = N_{c,a}/|b|^2 for a+b+c = 0.
inline StructureConstants build_structure_constants(const RootSystem& rs) {
  StructureConstants sc;
  sc.rs_ = rs;
  const int nu = rs.num_positive();
  const int w = rs.num_roots();
  sc.width_ = w;
  sc.n_table_.assign(static_cast<std::size_t>(w * w), 0);
  sc.sum_table_.assign(static_cast<std::size_t>(w * w), -1);
  for (int a = 0; a < w; ++a)
    for (int b = 0; b < w; ++b)
      if (auto s = rs.find(RootSystem::add(rs.root(a).coords, rs.root(b).coords)))
        sc.sum_table_[static_cast<std::size_t>(a * w + b)] = *s;

  std::vector<char> known(static_cast<std::size_t>(nu * nu), 0);
  std::vector<int> positive_n(static_cast<std::size_t>(nu * nu), 0);
  auto norm = [&](int id) { return rs.root(id).norm; };

  // N for arbitrary roots, given every positive pair whose sum is already processed.
  auto value = [&](auto&& self, int a, int b) -> int {
    const int s = sc.sum(a, b);
    if (s < 0) return 0;
    const bool pa = rs.is_positive(a), pb = rs.is_positive(b);
    if (pa && pb) {
      if (!known[static_cast<std::size_t>(a * nu + b)]) throw std::logic_error("structure constant requested out of order");
      return positive_n[static_cast<std::size_t>(a * nu + b)];
    }
    if (!pa && !pb) return -self(self, rs.negate(a), rs.negate(b));
    const int c = rs.negate(s);
    // a + b + c = 0; pick the pair with equal signs
    int num;
    int den;
    int base;
    if (rs.is_positive(c) == pa) {
      base = self(self, c, a);
      num = norm(c);
      den = norm(b);
    } else {
      base = self(self, b, c);
      num = norm(c);
      den = norm(a);
    }
    if ((base * num) % den != 0) throw std::logic_error("non-integral structure constant");
    return base * num / den;
  };
  auto set_positive = [&](int a, int b, int v) {
    positive_n[static_cast<std::size_t>(a * nu + b)] = v;
    positive_n[static_cast<std::size_t>(b * nu + a)] = -v;
    known[static_cast<std::size_t>(a * nu + b)] = known[static_cast<std::size_t>(b * nu + a)] = 1;
  };

  for (int xi = 0; xi < nu; ++xi) {
    std::vector<std::pair<int, int>> special;
    for (int a = 0; a < nu; ++a)
      for (int b = a + 1; b < nu; ++b)
        if (sc.sum(a, b) == xi) special.emplace_back(a, b);
    if (special.empty()) continue;
    const auto [a0, b0] = special.front();
    set_positive(a0, b0, root_string(rs, a0, rs.root(b0).coords).first + 1);
    for (std::size_t k = 1; k < special.size(); ++k) {
      const auto [a, b] = special[k];
      // Jacobi on (e_a, e_b, e_{-a0}); every term lands in e_{b0}
      const int m = rs.negate(a0);
      int rhs = 0;
      if (const int t = sc.sum(b, m); t >= 0) rhs += value(value, b, m) * value(value, a, t);
      if (const int t = sc.sum(m, a); t >= 0) rhs += value(value, m, a) * value(value, b, t);
      const int d = value(value, m, xi);
      if (d == 0 || rhs % d != 0) throw std::logic_error("extraspecial derivation failed");
      set_positive(a, b, -rhs / d);
    }
  }
  for (int a = 0; a < w; ++a)
    for (int b = 0; b < w; ++b) {
      if (sc.sum(a, b) < 0) continue;
      sc.n_table_[static_cast<std::size_t>(a * w + b)] = static_cast<std::int8_t>(value(value, a, b));
    }

  if (rs.type().letter == 'G') {
    // pin [e1,e2] = e12, [e1,e12] = 2e112, [e1,e112] = 3e1112, [e2,e1112] = e11122
    const int i1 = rs.id_of({1, 0}), i2 = rs.id_of({0, 1}), i12 = rs.id_of({1, 1});
    const int i112 = rs.id_of({2, 1}), i1112 = rs.id_of({3, 1});
    const std::array<std::array<int, 3>, 4> pins{{{i1, i2, 1}, {i1, i12, 2}, {i1, i112, 3}, {i2, i1112, 1}}};
    bool done = false;
    for (int mask = 0; mask < (1 << nu) && !done; ++mask) {
      std::vector<int> eps(static_cast<std::size_t>(nu));
      for (int k = 0; k < nu; ++k) eps[static_cast<std::size_t>(k)] = (mask >> k) & 1 ? -1 : 1;
      bool ok = true;
      for (const auto& [a, b, v] : pins) {
        const int s = sc.sum(a, b);
        if (sc.n(a, b) * eps[static_cast<std::size_t>(a)] * eps[static_cast<std::size_t>(b)] *
                eps[static_cast<std::size_t>(s)] != v)
          ok = false;
      }
      if (ok) {
        rescale(sc, eps);
        done = true;
      }
    }
    if (!done) throw std::logic_error("no sign rescaling matches the G2 normalization");
    if (sc.n(i112, i12) != 3) throw std::logic_error("G2 constant N(2a1+a2, a1+a2) differs from 3");
  }
  return sc;
}

}  // namespace hyperalg
