#pragma once

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <vector>

#include "hyperalg/root_system.hpp"

namespace hyperalg {

struct HasseEdge {
  int from;   // positive root id
  int simple; // 0-based simple index i, to = from + alpha_i
  int to;
};

/// Hasse diagram of the positive roots under adding a simple root, together
/// with the decomposition of its long-root subdiagram.
struct HasseData {
  std::vector<HasseEdge> edges;
  std::vector<std::vector<int>> up;    // up[id]   = edge indices leaving id
  std::vector<std::vector<int>> down;  // down[id] = edge indices entering id
  std::vector<std::vector<int>> long_components;
  std::vector<int> short_roots;
  /// The long component containing the long simple roots.
  std::vector<int> c0;
  /// Unique minimal vertex of every long component other than c0.
  std::vector<int> theta_roots;

  bool in_c0(int id) const { return std::find(c0.begin(), c0.end(), id) != c0.end(); }
};

inline HasseData hasse_and_components(const RootSystem& rs) {
  HasseData hd;
  const int nu = rs.num_positive();
  const int l = rs.rank();
  hd.up.resize(static_cast<std::size_t>(nu));
  hd.down.resize(static_cast<std::size_t>(nu));
  for (int a = 0; a < nu; ++a)
    for (int i = 0; i < l; ++i) {
      auto b = rs.find(RootSystem::add(rs.root(a).coords, rs.root(rs.simple(i)).coords));
      if (!b) continue;
      const int e = static_cast<int>(hd.edges.size());
      hd.edges.push_back({a, i, *b});
      hd.up[static_cast<std::size_t>(a)].push_back(e);
      hd.down[static_cast<std::size_t>(*b)].push_back(e);
    }

  for (const auto& e : hd.edges)
    if (rs.root(e.to).height != rs.root(e.from).height + 1) throw std::logic_error("Hasse edge skips a height");

  // connected components of the long subdiagram (undirected)
  std::vector<int> comp(static_cast<std::size_t>(nu), -1);
  for (int start = 0; start < nu; ++start) {
    if (!rs.root(start).is_long() || comp[static_cast<std::size_t>(start)] >= 0) continue;
    const int c = static_cast<int>(hd.long_components.size());
    hd.long_components.emplace_back();
    std::vector<int> stack{start};
    comp[static_cast<std::size_t>(start)] = c;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      hd.long_components[static_cast<std::size_t>(c)].push_back(v);
      auto visit = [&](int w) {
        if (rs.root(w).is_long() && comp[static_cast<std::size_t>(w)] < 0) {
          comp[static_cast<std::size_t>(w)] = c;
          stack.push_back(w);
        }
      };
      for (int e : hd.up[static_cast<std::size_t>(v)]) visit(hd.edges[static_cast<std::size_t>(e)].to);
      for (int e : hd.down[static_cast<std::size_t>(v)]) visit(hd.edges[static_cast<std::size_t>(e)].from);
    }
    std::sort(hd.long_components.back().begin(), hd.long_components.back().end());
  }
  for (int id = 0; id < nu; ++id)
    if (rs.root(id).is_short()) hd.short_roots.push_back(id);

  int c0_index = -1;
  for (int i = 0; i < l; ++i) {
    if (!rs.root(i).is_long()) continue;
    const int c = comp[static_cast<std::size_t>(i)];
    if (c0_index >= 0 && c0_index != c)
      throw std::logic_error("long simple roots lie in different long components");
    c0_index = c;
  }
  if (c0_index < 0) throw std::logic_error("no long simple root");
  hd.c0 = hd.long_components[static_cast<std::size_t>(c0_index)];

  for (std::size_t c = 0; c < hd.long_components.size(); ++c) {
    if (static_cast<int>(c) == c0_index) continue;
    std::vector<int> minimal;
    for (int v : hd.long_components[c]) {
      bool has_long_pred = false;
      for (int e : hd.down[static_cast<std::size_t>(v)])
        if (comp[static_cast<std::size_t>(hd.edges[static_cast<std::size_t>(e)].from)] == static_cast<int>(c))
          has_long_pred = true;
      if (!has_long_pred) minimal.push_back(v);
    }
    if (minimal.size() != 1) throw std::logic_error("long component without a unique minimal vertex");
    hd.theta_roots.push_back(minimal.front());
  }
  std::sort(hd.theta_roots.begin(), hd.theta_roots.end());

  if (!rs.type().simply_laced()) {
    // short subdiagram must be connected and contain a short simple root
    std::vector<char> seen(static_cast<std::size_t>(nu), 0);
    std::vector<int> stack{hd.short_roots.front()};
    seen[static_cast<std::size_t>(stack.back())] = 1;
    std::size_t count = 0;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      ++count;
      auto visit = [&](int w) {
        if (rs.root(w).is_short() && !seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = 1;
          stack.push_back(w);
        }
      };
      for (int e : hd.up[static_cast<std::size_t>(v)]) visit(hd.edges[static_cast<std::size_t>(e)].to);
      for (int e : hd.down[static_cast<std::size_t>(v)]) visit(hd.edges[static_cast<std::size_t>(e)].from);
    }
    if (count != hd.short_roots.size()) throw std::logic_error("short subdiagram is disconnected");
    bool has_short_simple = false;
    for (int i = 0; i < l; ++i) has_short_simple |= rs.root(i).is_short();
    if (!has_short_simple) throw std::logic_error("no short simple root");
  }
  return hd;
}

}  // namespace hyperalg
