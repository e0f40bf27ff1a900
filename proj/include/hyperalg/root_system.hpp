#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hyperalg {

/// Coefficients of a root (or weight) over the simple roots alpha_1..alpha_l.
using Coords = std::vector<int>;

enum class LengthClass { kShort, kLong };

struct Root {
  Coords coords;
  int height = 0;
  /// Squared length under the normalization <short, short> = 2.
  int norm = 2;
  LengthClass length = LengthClass::kLong;

  bool is_long() const { return length == LengthClass::kLong; }
  bool is_short() const { return length == LengthClass::kShort; }
};

struct CartanType {
  char letter = 'A';
  int rank = 1;

  std::string name() const { return std::string(1, letter) + std::to_string(rank); }
  bool simply_laced() const { return letter == 'A' || letter == 'D' || letter == 'E'; }
  friend bool operator==(const CartanType&, const CartanType&) = default;
};

inline std::string coords_label(const Coords& c) {
  std::string out;
  for (std::size_t i = 0; i < c.size(); ++i) {
    int v = c[i];
    if (v == 0) continue;
    if (v < 0) {
      out += "-";
      v = -v;
    } else if (!out.empty()) {
      out += "+";
    }
    if (v != 1) out += std::to_string(v);
    out += "a" + std::to_string(i + 1);
  }
  return out.empty() ? "0" : out;
}

/// Irreducible finite root system with Humphreys (Bourbaki) numbering of the
/// simple roots.  Root ids are dense: 0..nu-1 are the positive roots sorted by
/// height and then by descending coordinate vector (so simple root alpha_i has
/// id i-1), and id + nu is the negative of id.
class RootSystem {
 public:
  static constexpr int kDefaultRankCap = 8;

  const CartanType& type() const { return type_; }
  int rank() const { return type_.rank; }
  int num_positive() const { return nu_; }
  int num_roots() const { return 2 * nu_; }

  const Root& root(int id) const { return roots_.at(static_cast<std::size_t>(id)); }
  const std::vector<Root>& roots() const { return roots_; }
  bool is_positive(int id) const { return id < nu_; }
  int negate(int id) const { return id < nu_ ? id + nu_ : id - nu_; }
  int simple(int i) const { return i; }  // 0-based simple index -> root id

  std::optional<int> find(const Coords& c) const {
    auto it = index_.find(c);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }
  int id_of(const Coords& c) const {
    auto id = find(c);
    if (!id) throw std::invalid_argument("not a root: " + coords_label(c));
    return *id;
  }

  /// Symmetric invariant form on coordinate vectors.
  int inner(const Coords& a, const Coords& b) const {
    int s = 0;
    for (int i = 0; i < rank(); ++i) {
      if (a[i] == 0) continue;
      for (int j = 0; j < rank(); ++j) s += a[i] * form_[i][j] * b[j];
    }
    return s;
  }

  /// <beta, alpha^vee> = 2 (beta, alpha) / (alpha, alpha) for a root alpha.
  int pairing(const Coords& beta, int alpha_id) const {
    const int num = 2 * inner(beta, root(alpha_id).coords);
    const int den = root(alpha_id).norm;
    if (num % den != 0) throw std::logic_error("non-integral Cartan pairing");
    return num / den;
  }

  /// <root(id), alpha_i^vee> for simple index i (0-based).
  int cartan_pairing(int id, int i) const {
    const int v = pairings_[static_cast<std::size_t>(id % nu_)][static_cast<std::size_t>(i)];
    return id < nu_ ? v : -v;
  }

  /// Cartan matrix entry <alpha_i, alpha_j^vee>.
  int cartan(int i, int j) const { return 2 * form_[i][j] / form_[j][j]; }
  int simple_norm(int i) const { return form_[i][i]; }

  /// Coefficients of alpha^vee over the simple coroots alpha_i^vee.
  const std::vector<int>& coroot(int id) const { return coroots_.at(static_cast<std::size_t>(id)); }

  Coords reflect(int i, const Coords& v) const {
    Coords out = v;
    out[static_cast<std::size_t>(i)] -= pairing(v, simple(i));
    return out;
  }

  bool contains_sum(int a, int b) const {
    return find(add(root(a).coords, root(b).coords)).has_value();
  }

  static Coords add(const Coords& a, const Coords& b, int scale = 1) {
    Coords out = a;
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += scale * b[i];
    return out;
  }

 private:
  friend RootSystem build_root_system(char, int, int);

  CartanType type_;
  int nu_ = 0;
  std::vector<std::vector<int>> form_;
  std::vector<Root> roots_;
  std::map<Coords, int> index_;
  std::vector<std::vector<int>> pairings_;
  std::vector<std::vector<int>> coroots_;
};

namespace detail {

inline bool valid_type(char letter, int rank) {
  switch (letter) {
    case 'A': return rank >= 1;
    case 'B': return rank >= 2;
    case 'C': return rank >= 2;
    case 'D': return rank >= 4;
    case 'E': return rank >= 6 && rank <= 8;
    case 'F': return rank == 4;
    case 'G': return rank == 2;
    default: return false;
  }
}

// Simple-root norms and Dynkin edges in Humphreys numbering.
inline void dynkin_data(char letter, int l, std::vector<int>& norms,
                        std::vector<std::pair<int, int>>& edges) {
  norms.assign(static_cast<std::size_t>(l), 2);
  edges.clear();
  auto chain = [&](int from, int to) {
    for (int i = from; i + 1 <= to; ++i) edges.emplace_back(i, i + 1);
  };
  switch (letter) {
    case 'A': chain(0, l - 1); break;
    case 'B':
      chain(0, l - 1);
      for (int i = 0; i < l - 1; ++i) norms[static_cast<std::size_t>(i)] = 4;
      break;
    case 'C':
      chain(0, l - 1);
      norms[static_cast<std::size_t>(l - 1)] = 4;
      break;
    case 'D':
      chain(0, l - 2);
      edges.emplace_back(l - 3, l - 1);
      break;
    case 'E':
      edges.emplace_back(0, 2);
      edges.emplace_back(1, 3);
      chain(2, l - 1);
      break;
    case 'F':
      chain(0, 3);
      norms[0] = norms[1] = 4;
      break;
    case 'G':
      edges.emplace_back(0, 1);
      norms[1] = 6;
      break;
    default: break;
  }
}

}  // namespace detail

inline RootSystem build_root_system(char letter, int rank,
                                    int rank_cap = RootSystem::kDefaultRankCap) {
  if (letter >= 'a' && letter <= 'g') letter = static_cast<char>(letter - 'a' + 'A');
  if (!detail::valid_type(letter, rank) || rank > rank_cap) {
    throw std::invalid_argument("invalid Dynkin type/rank pair (" + std::string(1, letter) + ", " +
                                std::to_string(rank) + ")");
  }
  RootSystem rs;
  rs.type_ = {letter, rank};
  const auto l = static_cast<std::size_t>(rank);

  std::vector<int> norms;
  std::vector<std::pair<int, int>> edges;
  detail::dynkin_data(letter, rank, norms, edges);
  rs.form_.assign(l, std::vector<int>(l, 0));
  for (std::size_t i = 0; i < l; ++i) rs.form_[i][i] = norms[i];
  for (auto [i, j] : edges) {
    const int v = -std::max(norms[static_cast<std::size_t>(i)], norms[static_cast<std::size_t>(j)]) / 2;
    rs.form_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v;
    rs.form_[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = v;
  }
  const int short_norm = *std::min_element(norms.begin(), norms.end());

  // Closure by height using root strings: beta + alpha_i is a root iff
  // p - <beta, alpha_i^vee> > 0 where p is the length of the downward string.
  std::map<Coords, int> found;
  std::vector<Coords> layer;
  std::vector<Coords> all;
  for (std::size_t i = 0; i < l; ++i) {
    Coords c(l, 0);
    c[i] = 1;
    layer.push_back(c);
  }
  auto pairing_simple = [&](const Coords& b, std::size_t i) {
    int s = 0;
    for (std::size_t k = 0; k < l; ++k) s += b[k] * rs.form_[k][i];
    return 2 * s / rs.form_[i][i];
  };
  while (!layer.empty()) {
    for (auto& c : layer) {
      found.emplace(c, 0);
      all.push_back(c);
    }
    std::vector<Coords> next;
    for (const auto& b : layer) {
      for (std::size_t i = 0; i < l; ++i) {
        Coords up = b;
        ++up[i];
        if (found.count(up) || std::find(next.begin(), next.end(), up) != next.end()) continue;
        int p = 0;
        Coords down = b;
        while (true) {
          --down[i];
          if (!found.count(down)) break;
          ++p;
        }
        if (p - pairing_simple(b, i) > 0) next.push_back(up);
      }
    }
    layer = std::move(next);
  }

  auto height = [](const Coords& c) {
    int h = 0;
    for (int v : c) h += v;
    return h;
  };
  std::sort(all.begin(), all.end(), [&](const Coords& a, const Coords& b) {
    const int ha = height(a), hb = height(b);
    if (ha != hb) return ha < hb;
    return a > b;
  });

  rs.nu_ = static_cast<int>(all.size());
  rs.roots_.resize(2 * all.size());
  for (std::size_t k = 0; k < all.size(); ++k) {
    Root pos;
    pos.coords = all[k];
    pos.height = height(all[k]);
    pos.norm = rs.inner(all[k], all[k]);
    const bool is_long = letter == 'A' || letter == 'D' || letter == 'E' || pos.norm > short_norm;
    pos.length = is_long ? LengthClass::kLong : LengthClass::kShort;
    Root neg = pos;
    for (int& v : neg.coords) v = -v;
    neg.height = -pos.height;
    rs.roots_[k] = pos;
    rs.roots_[k + all.size()] = neg;
  }
  for (int id = 0; id < rs.num_roots(); ++id) rs.index_.emplace(rs.roots_[static_cast<std::size_t>(id)].coords, id);

  rs.pairings_.assign(all.size(), std::vector<int>(l, 0));
  for (std::size_t k = 0; k < all.size(); ++k)
    for (std::size_t i = 0; i < l; ++i) rs.pairings_[k][i] = pairing_simple(all[k], i);

  rs.coroots_.resize(rs.roots_.size());
  for (std::size_t id = 0; id < rs.roots_.size(); ++id) {
    const Root& r = rs.roots_[id];
    std::vector<int> cv(l, 0);
    for (std::size_t i = 0; i < l; ++i) {
      const int num = r.coords[i] * rs.form_[i][i];
      if (num % r.norm != 0) throw std::logic_error("non-integral coroot");
      cv[i] = num / r.norm;
    }
    rs.coroots_[id] = std::move(cv);
  }
  return rs;
}

inline std::size_t classical_positive_count(char letter, int l) {
  switch (letter) {
    case 'A': return static_cast<std::size_t>(l * (l + 1) / 2);
    case 'B':
    case 'C': return static_cast<std::size_t>(l * l);
    case 'D': return static_cast<std::size_t>(l * (l - 1));
    case 'E': return l == 6 ? 36u : l == 7 ? 63u : 120u;
    case 'F': return 24;
    case 'G': return 6;
    default: return 0;
  }
}

/// Lengths (p, q) of the alpha-string through beta: beta - p alpha, ..., beta + q alpha.
inline std::pair<int, int> root_string(const RootSystem& rs, int alpha_id, const Coords& beta) {
  const Coords& a = rs.root(alpha_id).coords;
  if (beta == a || beta == RootSystem::add(Coords(a.size(), 0), a, -1))
    throw std::invalid_argument("root string through a proportional root is undefined");
  int p = 0;
  while (rs.find(RootSystem::add(beta, a, -(p + 1)))) ++p;
  int q = 0;
  while (rs.find(RootSystem::add(beta, a, q + 1))) ++q;
  return {p, q};
}

}  // namespace hyperalg
