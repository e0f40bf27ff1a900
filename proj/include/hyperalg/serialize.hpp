#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "hyperalg/chevalley.hpp"
#include "hyperalg/convex_order.hpp"
#include "hyperalg/exponent_table.hpp"
#include "hyperalg/hasse.hpp"
#include "hyperalg/root_system.hpp"

namespace hyperalg {

using ordered_json = nlohmann::ordered_json;

inline ordered_json rootsys_json(const RootSystem& rs, const std::optional<std::vector<int>>& word = std::nullopt) {
  const HasseData hd = hasse_and_components(rs);
  const ConvexOrder co = convex_order(rs, word);
  ordered_json j;
  j["type"] = std::string(1, rs.type().letter);
  j["rank"] = rs.rank();
  j["simple_roots"] = ordered_json::array();
  for (int i = 0; i < rs.rank(); ++i) j["simple_roots"].push_back(rs.root(rs.simple(i)).coords);
  j["positive_roots"] = ordered_json::array();
  for (int id = 0; id < rs.num_positive(); ++id) j["positive_roots"].push_back(rs.root(id).coords);
  j["long"] = ordered_json::array();
  for (int id = 0; id < rs.num_positive(); ++id) j["long"].push_back(rs.root(id).is_long());
  j["convex_order"] = co.ordered_roots;
  j["hasse_edges"] = ordered_json::array();
  for (const auto& e : hd.edges) j["hasse_edges"].push_back({e.from, e.simple, e.to});
  j["long_components"] = hd.long_components;
  j["theta"] = hd.theta_roots;
  return j;
}

inline ordered_json order_json(const RootSystem& rs, const std::optional<std::vector<int>>& word = std::nullopt) {
  const ConvexOrder co = convex_order(rs, word);
  ordered_json j;
  j["type"] = std::string(1, rs.type().letter);
  j["rank"] = rs.rank();
  j["reduced_word"] = co.reduced_word;
  j["root_ids"] = co.ordered_roots;
  j["roots"] = ordered_json::array();
  for (int id : co.ordered_roots) j["roots"].push_back(coords_label(rs.root(id).coords));
  return j;
}

inline ordered_json tables_json(const RootSystem& rs, int p, int r) {
  const ExponentTable t = exponent_table(rs, p, r);
  ordered_json j;
  j["type"] = std::string(1, rs.type().letter);
  j["rank"] = rs.rank();
  j["p"] = p;
  j["r"] = r;
  j["case"] = std::string(1, t.case_id);
  j["theta"] = ordered_json::array();
  for (int id : t.theta) j["theta"].push_back(coords_label(rs.root(id).coords));
  ordered_json amap = ordered_json::object();
  for (int id = 0; id < rs.num_positive(); ++id)
    amap[coords_label(rs.root(id).coords)] = t.a_map[static_cast<std::size_t>(id)];
  j["a_map"] = std::move(amap);
  return j;
}

inline std::string constants_csv(const RootSystem& rs) { return build_structure_constants(rs).to_csv(); }

}  // namespace hyperalg
