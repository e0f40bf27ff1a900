#pragma once

#include <algorithm>
#include <set>
#include <stdexcept>
#include <vector>

#include "hyperalg/root_system.hpp"

namespace hyperalg {

/// Per-root exponents a_alpha and the extra generator roots Theta describing
/// the subalgebra generated by the simple divided powers below p^r.
struct ExponentTable {
  int p = 2;
  int r = 1;
  char case_id = 'a';
  /// a_map[id] for positive root ids.
  std::vector<int> a_map;
  /// Sorted positive root ids.
  std::vector<int> theta;

  bool reduced(int id) const { return a_map.at(static_cast<std::size_t>(id)) < r; }
};

inline bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline ExponentTable exponent_table(const RootSystem& rs, int p, int r) {
  if (r < 0) throw std::invalid_argument("level r must be nonnegative");
  if (!is_prime(p)) throw std::invalid_argument("p must be prime");
  ExponentTable t;
  t.p = p;
  t.r = r;
  const int nu = rs.num_positive();
  const int l = rs.rank();
  const char letter = rs.type().letter;
  t.a_map.assign(static_cast<std::size_t>(nu), r);

  std::vector<Coords> lowered;
  std::vector<Coords> theta;
  auto coords = [l](std::initializer_list<int> c) {
    Coords v(c);
    v.resize(static_cast<std::size_t>(l), 0);
    return v;
  };

  if (letter == 'B' && p == 2) {
    t.case_id = 'b';
    for (int i = 1; i <= l; ++i)
      for (int j = i + 1; j <= l; ++j) {
        Coords c(static_cast<std::size_t>(l), 0);
        for (int k = i; k <= j - 1; ++k) c[static_cast<std::size_t>(k - 1)] = 1;
        for (int k = j; k <= l; ++k) c[static_cast<std::size_t>(k - 1)] = 2;
        lowered.push_back(c);
      }
    Coords th(static_cast<std::size_t>(l), 0);
    th[static_cast<std::size_t>(l - 2)] = 1;
    th[static_cast<std::size_t>(l - 1)] = 2;
    theta.push_back(th);
  } else if (letter == 'C' && p == 2) {
    t.case_id = 'c';
    for (int i = 1; i <= l - 1; ++i) {
      Coords c(static_cast<std::size_t>(l), 0);
      for (int k = i; k <= l - 1; ++k) c[static_cast<std::size_t>(k - 1)] = 2;
      c[static_cast<std::size_t>(l - 1)] = 1;
      lowered.push_back(c);
      theta.push_back(c);
    }
  } else if (letter == 'F' && p == 2) {
    t.case_id = 'd';
    lowered = {coords({0, 1, 2, 0}), coords({1, 1, 2, 0}), coords({1, 2, 2, 0}),
               coords({0, 1, 2, 2}), coords({1, 1, 2, 2}), coords({1, 2, 2, 2}),
               coords({1, 2, 4, 2}), coords({1, 3, 4, 2}), coords({2, 3, 4, 2})};
    theta = {coords({0, 1, 2, 0}), coords({0, 1, 2, 2})};
  } else if (letter == 'G' && p == 2) {
    t.case_id = 'e';
    lowered = {coords({2, 1}), coords({3, 1}), coords({3, 2})};
    theta = {coords({2, 1})};
  } else if (letter == 'G' && p == 3) {
    t.case_id = 'f';
    lowered = {coords({3, 1}), coords({3, 2})};
    theta = {coords({3, 1})};
  }

  for (const auto& c : lowered) t.a_map[static_cast<std::size_t>(rs.id_of(c))] = r - 1;
  for (const auto& c : theta) t.theta.push_back(rs.id_of(c));
  std::sort(t.theta.begin(), t.theta.end());
  return t;
}

}  // namespace hyperalg
