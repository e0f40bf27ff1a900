#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hyperalg/root_system.hpp"

namespace hyperalg {

/// Total order beta_1, ..., beta_nu on the positive roots induced by a reduced
/// word s_{i_1} ... s_{i_nu} of the longest Weyl group element:
/// beta_k = s_{i_1} ... s_{i_{k-1}} (alpha_{i_k}).
struct ConvexOrder {
  /// 1-based simple reflection indices.
  std::vector<int> reduced_word;
  /// Root ids beta_1..beta_nu.
  std::vector<int> ordered_roots;
  /// position[root id] = index k (0-based) with beta_{k+1} = root, for positive ids.
  std::vector<int> position;

  int size() const { return static_cast<int>(ordered_roots.size()); }
  int root_at(int k) const { return ordered_roots.at(static_cast<std::size_t>(k)); }
  int index_of(int root_id) const { return position.at(static_cast<std::size_t>(root_id)); }
};

/// Greedy reduced word for w0: starting from rho, repeatedly apply the lowest
/// s_i with a positive coordinate until rho is sent to -rho.
inline std::vector<int> greedy_longest_word(const RootSystem& rs) {
  const int l = rs.rank();
  // coordinates over fundamental weights
  std::vector<int> v(static_cast<std::size_t>(l), 1);
  std::vector<int> word;
  while (true) {
    int pick = -1;
    for (int i = 0; i < l; ++i)
      if (v[static_cast<std::size_t>(i)] > 0) {
        pick = i;
        break;
      }
    if (pick < 0) break;
    // s_i acts on fundamental-weight coordinates by v_j -= v_i * <alpha_i, alpha_j^vee>
    const int vi = v[static_cast<std::size_t>(pick)];
    for (int j = 0; j < l; ++j) v[static_cast<std::size_t>(j)] -= vi * rs.cartan(pick, j);
    word.push_back(pick + 1);
  }
  return word;
}

inline std::vector<int> default_longest_word(const RootSystem& rs) {
  if (rs.type().letter == 'G') return {2, 1, 2, 1, 2, 1};
  return greedy_longest_word(rs);
}

inline ConvexOrder convex_order(const RootSystem& rs,
                                const std::optional<std::vector<int>>& word = std::nullopt) {
  ConvexOrder co;
  co.reduced_word = word ? *word : default_longest_word(rs);
  const int nu = rs.num_positive();
  if (static_cast<int>(co.reduced_word.size()) != nu)
    throw std::invalid_argument("word length " + std::to_string(co.reduced_word.size()) +
                                " differs from the number of positive roots " + std::to_string(nu));
  for (int i : co.reduced_word)
    if (i < 1 || i > rs.rank()) throw std::invalid_argument("simple reflection index out of range");

  co.position.assign(static_cast<std::size_t>(nu), -1);
  for (int k = 0; k < nu; ++k) {
    Coords c(static_cast<std::size_t>(rs.rank()), 0);
    c[static_cast<std::size_t>(co.reduced_word[static_cast<std::size_t>(k)] - 1)] = 1;
    for (int j = k - 1; j >= 0; --j) c = rs.reflect(co.reduced_word[static_cast<std::size_t>(j)] - 1, c);
    auto id = rs.find(c);
    if (!id || !rs.is_positive(*id) || co.position[static_cast<std::size_t>(*id)] >= 0)
      throw std::invalid_argument("word is not a reduced expression of the longest element");
    co.position[static_cast<std::size_t>(*id)] = k;
    co.ordered_roots.push_back(*id);
  }
  return co;
}

/// Every pair j < k with beta_j + beta_k a root has the sum strictly between.
inline bool is_convex(const RootSystem& rs, const ConvexOrder& co) {
  const int nu = co.size();
  for (int j = 0; j < nu; ++j)
    for (int k = j + 1; k < nu; ++k) {
      auto s = rs.find(RootSystem::add(rs.root(co.root_at(j)).coords, rs.root(co.root_at(k)).coords));
      if (!s) continue;
      const int pos = co.index_of(*s);
      if (!(j < pos && pos < k)) return false;
    }
  return true;
}

}  // namespace hyperalg
