#include <gtest/gtest.h>

#include <algorithm>
#include <fstream>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "hyperalg/convex_order.hpp"
#include "hyperalg/exponent_table.hpp"
#include "hyperalg/hasse.hpp"
#include "hyperalg/root_system.hpp"

using namespace hyperalg;

namespace {

struct TypeRank {
  char letter;
  int rank;
};

const std::vector<TypeRank> kSmallTypes = {{'A', 1}, {'A', 2}, {'A', 3}, {'B', 2}, {'B', 3}, {'C', 2},
                                           {'C', 3}, {'D', 4}, {'G', 2}, {'F', 4}, {'E', 6}};

const std::vector<TypeRank> kNonSimplyLaced = {{'B', 2}, {'B', 3}, {'B', 4}, {'C', 2},
                                               {'C', 3}, {'C', 4}, {'F', 4}, {'G', 2}};

std::vector<Coords> positive_coords(const RootSystem& rs) {
  std::vector<Coords> out;
  for (int id = 0; id < rs.num_positive(); ++id) out.push_back(rs.root(id).coords);
  return out;
}

bool is_root(const RootSystem& rs, const Coords& c) { return rs.find(c).has_value(); }

}  // namespace

TEST(RootSystem, ClassicalCountsUpToRankCap) {
  for (int l = 1; l <= 8; ++l) EXPECT_EQ(build_root_system('A', l).num_positive(), l * (l + 1) / 2);
  for (int l = 2; l <= 8; ++l) {
    EXPECT_EQ(build_root_system('B', l).num_positive(), l * l);
    EXPECT_EQ(build_root_system('C', l).num_positive(), l * l);
  }
  for (int l = 4; l <= 8; ++l) EXPECT_EQ(build_root_system('D', l).num_positive(), l * (l - 1));
  EXPECT_EQ(build_root_system('E', 6).num_positive(), 36);
  EXPECT_EQ(build_root_system('E', 7).num_positive(), 63);
  EXPECT_EQ(build_root_system('E', 8).num_positive(), 120);
  EXPECT_EQ(build_root_system('F', 4).num_positive(), 24);
  EXPECT_EQ(build_root_system('G', 2).num_positive(), 6);
}

TEST(RootSystem, MatchesGoldenWeylOrbitData) {
  for (auto [letter, rank] : kSmallTypes) {
    const std::string path = std::string(HYPERALG_GOLDEN_DIR) + "/roots_" + letter + std::to_string(rank) + ".json";
    std::ifstream in(path);
    ASSERT_TRUE(in) << path;
    const auto doc = nlohmann::json::parse(in);
    const RootSystem rs = build_root_system(letter, rank);
    ASSERT_EQ(doc["positive_roots"].size(), static_cast<std::size_t>(rs.num_positive())) << path;
    for (int id = 0; id < rs.num_positive(); ++id) {
      EXPECT_EQ(doc["positive_roots"][id].get<Coords>(), rs.root(id).coords) << path << " id " << id;
      EXPECT_EQ(doc["long"][id].get<bool>(), rs.root(id).is_long()) << path << " id " << id;
    }
  }
}

TEST(RootSystem, G2PositiveRoots) {
  const RootSystem rs = build_root_system('G', 2);
  const std::vector<Coords> expected = {{1, 0}, {0, 1}, {1, 1}, {2, 1}, {3, 1}, {3, 2}};
  EXPECT_EQ(positive_coords(rs), expected);
  EXPECT_EQ(rs.root(rs.id_of({3, 2})).norm, 6);
  EXPECT_EQ(rs.root(rs.id_of({2, 1})).norm, 2);
}

TEST(RootSystem, A1AndB2) {
  const RootSystem a1 = build_root_system('A', 1);
  EXPECT_EQ(a1.num_positive(), 1);
  EXPECT_EQ(a1.root(0).coords, Coords{1});

  const RootSystem b2 = build_root_system('B', 2);
  const std::vector<Coords> expected = {{1, 0}, {0, 1}, {1, 1}, {1, 2}};
  EXPECT_EQ(positive_coords(b2), expected);
  std::set<Coords> longs;
  for (int id = 0; id < b2.num_positive(); ++id)
    if (b2.root(id).is_long()) longs.insert(b2.root(id).coords);
  EXPECT_EQ(longs, (std::set<Coords>{{1, 0}, {1, 2}}));
}

TEST(RootSystem, Invariants) {
  for (auto [letter, rank] : kSmallTypes) {
    const RootSystem rs = build_root_system(letter, rank);
    for (int id = 0; id < rs.num_roots(); ++id) {
      const Root& r = rs.root(id);
      const bool nonneg = std::all_of(r.coords.begin(), r.coords.end(), [](int c) { return c >= 0; });
      const bool nonpos = std::all_of(r.coords.begin(), r.coords.end(), [](int c) { return c <= 0; });
      EXPECT_TRUE(nonneg || nonpos);
      EXPECT_NE(r.height, 0);
      EXPECT_TRUE(r.norm == 2 || r.norm == 4 || (letter == 'G' && r.norm == 6));
      EXPECT_EQ(rs.negate(rs.negate(id)), id);
      EXPECT_EQ(rs.root(rs.negate(id)).coords, RootSystem::add(Coords(r.coords.size(), 0), r.coords, -1));
    }
    for (int i = 0; i < rank; ++i) EXPECT_EQ(rs.root(i).height, 1);
  }
}

TEST(RootSystem, InvalidPairsAreRejectedWithDiagnostic) {
  for (auto [letter, rank] : std::vector<TypeRank>{{'B', 1}, {'D', 3}, {'E', 5}, {'E', 9}, {'F', 3}, {'G', 3}, {'X', 2}, {'A', 0}}) {
    try {
      build_root_system(letter, rank);
      FAIL() << letter << rank;
    } catch (const std::invalid_argument& e) {
      EXPECT_NE(std::string(e.what()).find(std::string(1, letter) + ", " + std::to_string(rank)), std::string::npos);
    }
  }
  EXPECT_THROW(build_root_system('A', 9), std::invalid_argument);
  EXPECT_NO_THROW(build_root_system('A', 9, 9));
  EXPECT_EQ(build_root_system('g', 2).type().letter, 'G');
}

TEST(RootString, Examples) {
  const RootSystem b2 = build_root_system('B', 2);
  EXPECT_EQ(root_string(b2, b2.id_of({0, 1}), {1, 2}), std::make_pair(2, 0));
  EXPECT_EQ(root_string(b2, b2.id_of({1, 0}), {1, 2}), std::make_pair(0, 0));
  const RootSystem g2 = build_root_system('G', 2);
  EXPECT_EQ(root_string(g2, g2.id_of({1, 0}), {0, 1}), std::make_pair(0, 3));
  EXPECT_THROW(root_string(g2, 0, {1, 0}), std::invalid_argument);
  EXPECT_THROW(root_string(g2, 0, {-1, 0}), std::invalid_argument);
}

TEST(RootString, DifferenceEqualsPairing) {
  for (auto [letter, rank] : kSmallTypes) {
    const RootSystem rs = build_root_system(letter, rank);
    for (int a = 0; a < rs.num_roots(); ++a)
      for (int b = 0; b < rs.num_roots(); ++b) {
        if (b == a || b == rs.negate(a)) continue;
        const Coords& beta = rs.root(b).coords;
        auto [p, q] = root_string(rs, a, beta);
        // unbroken string: every intermediate vector is a root
        for (int k = -p; k <= q; ++k) EXPECT_TRUE(is_root(rs, RootSystem::add(beta, rs.root(a).coords, k)));
        EXPECT_EQ(p - q, rs.pairing(beta, a));
      }
  }
}

TEST(ConvexOrder, G2PinnedWord) {
  const RootSystem rs = build_root_system('G', 2);
  const ConvexOrder co = convex_order(rs);
  EXPECT_EQ(co.reduced_word, (std::vector<int>{2, 1, 2, 1, 2, 1}));
  std::vector<Coords> got;
  for (int k = 0; k < co.size(); ++k) got.push_back(rs.root(co.root_at(k)).coords);
  const std::vector<Coords> expected = {{0, 1}, {1, 1}, {3, 2}, {2, 1}, {3, 1}, {1, 0}};
  EXPECT_EQ(got, expected);
}

TEST(ConvexOrder, A1AndA2) {
  const RootSystem a1 = build_root_system('A', 1);
  EXPECT_EQ(convex_order(a1).ordered_roots, std::vector<int>{0});
  const RootSystem a2 = build_root_system('A', 2);
  const ConvexOrder co = convex_order(a2, std::vector<int>{1, 2, 1});
  std::vector<Coords> got;
  for (int k = 0; k < co.size(); ++k) got.push_back(a2.root(co.root_at(k)).coords);
  EXPECT_EQ(got, (std::vector<Coords>{{1, 0}, {1, 1}, {0, 1}}));
}

TEST(ConvexOrder, RejectsBadWords) {
  const RootSystem a2 = build_root_system('A', 2);
  EXPECT_THROW(convex_order(a2, std::vector<int>{1, 2}), std::invalid_argument);
  EXPECT_THROW(convex_order(a2, std::vector<int>{1, 1, 2}), std::invalid_argument);
  EXPECT_THROW(convex_order(a2, std::vector<int>{1, 3, 1}), std::invalid_argument);
  const RootSystem b2 = build_root_system('B', 2);
  EXPECT_THROW(convex_order(b2, std::vector<int>{1, 2, 1, 1}), std::invalid_argument);
}

TEST(ConvexOrder, DefaultOrdersAreConvexAndExhaustive) {
  for (auto [letter, rank] : std::vector<TypeRank>{{'A', 1}, {'A', 2}, {'A', 3}, {'A', 5}, {'B', 2}, {'B', 3},
                                                   {'B', 4}, {'C', 2}, {'C', 3}, {'C', 4}, {'D', 4}, {'D', 5},
                                                   {'G', 2}, {'F', 4}, {'E', 6}, {'E', 7}}) {
    const RootSystem rs = build_root_system(letter, rank);
    const ConvexOrder co = convex_order(rs);
    EXPECT_EQ(co.size(), rs.num_positive());
    std::set<int> seen(co.ordered_roots.begin(), co.ordered_roots.end());
    EXPECT_EQ(static_cast<int>(seen.size()), rs.num_positive());
    EXPECT_EQ(co.root_at(0), co.reduced_word.front() - 1);
    EXPECT_TRUE(is_convex(rs, co)) << letter << rank;
  }
}

TEST(ConvexOrder, AlternativeWordsAreConvex) {
  const RootSystem b2 = build_root_system('B', 2);
  EXPECT_TRUE(is_convex(b2, convex_order(b2, std::vector<int>{1, 2, 1, 2})));
  EXPECT_TRUE(is_convex(b2, convex_order(b2, std::vector<int>{2, 1, 2, 1})));
  const RootSystem a3 = build_root_system('A', 3);
  EXPECT_TRUE(is_convex(a3, convex_order(a3, std::vector<int>{1, 2, 1, 3, 2, 1})));
  EXPECT_TRUE(is_convex(a3, convex_order(a3, std::vector<int>{2, 1, 3, 2, 1, 3})));
}

TEST(Hasse, EdgesJoinConsecutiveHeights) {
  for (auto [letter, rank] : kSmallTypes) {
    const RootSystem rs = build_root_system(letter, rank);
    const HasseData hd = hasse_and_components(rs);
    for (const auto& e : hd.edges) {
      EXPECT_EQ(rs.root(e.to).height, rs.root(e.from).height + 1);
      EXPECT_EQ(rs.root(e.to).coords, RootSystem::add(rs.root(e.from).coords, rs.root(e.simple).coords));
    }
    // edge count oracle: every (root, simple) pair whose sum is a root
    std::size_t count = 0;
    for (int a = 0; a < rs.num_positive(); ++a)
      for (int i = 0; i < rank; ++i) count += is_root(rs, RootSystem::add(rs.root(a).coords, rs.root(i).coords));
    EXPECT_EQ(hd.edges.size(), count);
  }
}

TEST(Hasse, F4HasFourLongComponents) {
  const RootSystem rs = build_root_system('F', 4);
  const HasseData hd = hasse_and_components(rs);
  EXPECT_EQ(hd.long_components.size(), 4u);
  EXPECT_EQ(hd.theta_roots.size(), 3u);
  std::set<Coords> theta;
  for (int id : hd.theta_roots) theta.insert(rs.root(id).coords);
  EXPECT_EQ(theta, (std::set<Coords>{{0, 1, 2, 0}, {0, 1, 2, 2}, {1, 2, 4, 2}}));
  std::set<Coords> c0;
  for (int id : hd.c0) c0.insert(rs.root(id).coords);
  EXPECT_EQ(c0, (std::set<Coords>{{1, 0, 0, 0}, {0, 1, 0, 0}, {1, 1, 0, 0}}));
}

TEST(Hasse, CTypeLongComponentsAreSingletons) {
  for (int l = 2; l <= 5; ++l) {
    const RootSystem rs = build_root_system('C', l);
    const HasseData hd = hasse_and_components(rs);
    ASSERT_EQ(static_cast<int>(hd.long_components.size()), l);
    std::set<Coords> got;
    for (const auto& comp : hd.long_components) {
      EXPECT_EQ(comp.size(), 1u);
      got.insert(rs.root(comp.front()).coords);
    }
    std::set<Coords> expected;
    for (int i = 1; i <= l; ++i) {
      Coords c(static_cast<std::size_t>(l), 0);
      for (int k = i; k <= l - 1; ++k) c[static_cast<std::size_t>(k - 1)] = 2;
      c[static_cast<std::size_t>(l - 1)] = 1;
      expected.insert(c);
    }
    EXPECT_EQ(got, expected);
  }
}

TEST(Hasse, BTypeAndG2Components) {
  for (int l = 2; l <= 5; ++l) {
    const RootSystem rs = build_root_system('B', l);
    const HasseData hd = hasse_and_components(rs);
    EXPECT_EQ(hd.long_components.size(), 2u);
    ASSERT_EQ(hd.theta_roots.size(), 1u);
    Coords th(static_cast<std::size_t>(l), 0);
    th[static_cast<std::size_t>(l - 2)] = 1;
    th[static_cast<std::size_t>(l - 1)] = 2;
    EXPECT_EQ(rs.root(hd.theta_roots.front()).coords, th);
    EXPECT_EQ(static_cast<int>(hd.short_roots.size()), l);
  }
  const RootSystem g2 = build_root_system('G', 2);
  const HasseData hd = hasse_and_components(g2);
  EXPECT_EQ(hd.long_components.size(), 2u);
  ASSERT_EQ(hd.theta_roots.size(), 1u);
  EXPECT_EQ(g2.root(hd.theta_roots.front()).coords, (Coords{3, 1}));
  EXPECT_EQ(hd.short_roots.size(), 3u);
}

TEST(Hasse, SimplyLacedSingleComponent) {
  const RootSystem a2 = build_root_system('A', 2);
  const HasseData hd = hasse_and_components(a2);
  ASSERT_EQ(hd.long_components.size(), 1u);
  EXPECT_EQ(hd.long_components.front().size(), 3u);
  EXPECT_TRUE(hd.theta_roots.empty());
  const HasseData d4 = hasse_and_components(build_root_system('D', 4));
  EXPECT_EQ(d4.long_components.size(), 1u);
}

TEST(Hasse, LongEdgesCarryLongLabels) {
  for (auto [letter, rank] : kNonSimplyLaced) {
    const RootSystem rs = build_root_system(letter, rank);
    const HasseData hd = hasse_and_components(rs);
    for (const auto& e : hd.edges)
      if (rs.root(e.from).is_long() && rs.root(e.to).is_long()) EXPECT_TRUE(rs.root(e.simple).is_long());
  }
}

TEST(RootLemmas, LongMinusShortStrings) {
  // types B, C, F only; G2 has a long root minus a short root whose double step is short
  for (auto [letter, rank] : kNonSimplyLaced) {
    if (letter == 'G') continue;
    const RootSystem rs = build_root_system(letter, rank);
    for (int b = 0; b < rs.num_roots(); ++b) {
      if (!rs.root(b).is_long()) continue;
      const Coords& beta = rs.root(b).coords;
      for (int a = 0; a < rs.num_roots(); ++a) {
        auto g = rs.find(RootSystem::add(beta, rs.root(a).coords, -1));
        if (!g || !rs.root(*g).is_short()) continue;
        EXPECT_TRUE(rs.root(a).is_short());
        auto b2 = rs.find(RootSystem::add(beta, rs.root(a).coords, -2));
        ASSERT_TRUE(b2.has_value());
        EXPECT_TRUE(rs.root(*b2).is_long());
        EXPECT_FALSE(is_root(rs, RootSystem::add(beta, rs.root(a).coords, -3)));
        EXPECT_FALSE(is_root(rs, RootSystem::add(beta, rs.root(a).coords, 1)));
      }
    }
  }
}

TEST(RootLemmas, LongSumsHaveEqualLengthSummands) {
  for (auto [letter, rank] : kNonSimplyLaced) {
    if (letter == 'G') continue;
    const RootSystem rs = build_root_system(letter, rank);
    for (int b = 0; b < rs.num_roots(); ++b)
      for (int c = 0; c < rs.num_roots(); ++c) {
        auto s = rs.find(RootSystem::add(rs.root(b).coords, rs.root(c).coords));
        if (!s || !rs.root(*s).is_long()) continue;
        EXPECT_EQ(rs.root(b).is_long(), rs.root(c).is_long());
      }
  }
}

TEST(RootLemmas, OutsideC0FromC0OrShortNeedsShort) {
  for (auto [letter, rank] : kNonSimplyLaced) {
    if (letter == 'G') continue;
    const RootSystem rs = build_root_system(letter, rank);
    const HasseData hd = hasse_and_components(rs);
    auto allowed = [&](int id) { return rs.root(id).is_short() || hd.in_c0(id); };
    for (int b = 0; b < rs.num_positive(); ++b)
      for (int c = 0; c < rs.num_positive(); ++c) {
        auto s = rs.find(RootSystem::add(rs.root(b).coords, rs.root(c).coords));
        if (!s || !rs.root(*s).is_long() || hd.in_c0(*s) || !allowed(b) || !allowed(c)) continue;
        EXPECT_TRUE(rs.root(b).is_short() && rs.root(c).is_short());
      }
  }
}

TEST(RootLemmas, C0IsSpannedByLongSimpleRoots) {
  for (auto [letter, rank] : kNonSimplyLaced) {
    const RootSystem rs = build_root_system(letter, rank);
    const HasseData hd = hasse_and_components(rs);
    for (int id = 0; id < rs.num_positive(); ++id) {
      bool long_support = true;
      for (int i = 0; i < rank; ++i)
        if (rs.root(id).coords[static_cast<std::size_t>(i)] != 0 && !rs.root(i).is_long()) long_support = false;
      EXPECT_EQ(hd.in_c0(id), long_support) << letter << rank << " " << coords_label(rs.root(id).coords);
    }
  }
}

TEST(ExponentTable, Cases) {
  const RootSystem b2 = build_root_system('B', 2);
  for (int r = 1; r <= 3; ++r) {
    const ExponentTable t = exponent_table(b2, 2, r);
    EXPECT_EQ(t.case_id, 'b');
    EXPECT_EQ(t.theta, std::vector<int>{b2.id_of({1, 2})});
    for (int id = 0; id < b2.num_positive(); ++id)
      EXPECT_EQ(t.a_map[static_cast<std::size_t>(id)], id == b2.id_of({1, 2}) ? r - 1 : r);
  }
  const RootSystem g2 = build_root_system('G', 2);
  const ExponentTable f = exponent_table(g2, 3, 2);
  EXPECT_EQ(f.case_id, 'f');
  EXPECT_EQ(f.theta, std::vector<int>{g2.id_of({3, 1})});
  std::set<Coords> lowered;
  for (int id = 0; id < g2.num_positive(); ++id)
    if (f.reduced(id)) lowered.insert(g2.root(id).coords);
  EXPECT_EQ(lowered, (std::set<Coords>{{3, 1}, {3, 2}}));

  const ExponentTable e = exponent_table(g2, 2, 1);
  EXPECT_EQ(e.case_id, 'e');
  EXPECT_EQ(std::count(e.a_map.begin(), e.a_map.end(), 0), 3);
  EXPECT_EQ(exponent_table(g2, 5, 1).case_id, 'a');

  const RootSystem a3 = build_root_system('A', 3);
  const ExponentTable a = exponent_table(a3, 2, 2);
  EXPECT_EQ(a.case_id, 'a');
  EXPECT_TRUE(a.theta.empty());
  EXPECT_TRUE(std::all_of(a.a_map.begin(), a.a_map.end(), [](int v) { return v == 2; }));

  const RootSystem b3 = build_root_system('B', 3);
  const ExponentTable tb3 = exponent_table(b3, 2, 1);
  EXPECT_EQ(std::count(tb3.a_map.begin(), tb3.a_map.end(), 0), 3);
  EXPECT_EQ(exponent_table(b3, 3, 1).case_id, 'a');

  const RootSystem c3 = build_root_system('C', 3);
  const ExponentTable tc3 = exponent_table(c3, 2, 1);
  EXPECT_EQ(tc3.theta.size(), 2u);
  EXPECT_EQ(std::count(tc3.a_map.begin(), tc3.a_map.end(), 0), 2);

  const RootSystem f4 = build_root_system('F', 4);
  const ExponentTable tf4 = exponent_table(f4, 2, 1);
  EXPECT_EQ(tf4.case_id, 'd');
  EXPECT_EQ(tf4.theta.size(), 2u);
  EXPECT_EQ(std::count(tf4.a_map.begin(), tf4.a_map.end(), 0), 9);
  for (int id : tf4.theta) EXPECT_TRUE(tf4.reduced(id));

  EXPECT_THROW(exponent_table(b2, 4, 1), std::invalid_argument);
}

TEST(ExponentTable, LoweredRootsAreLongOutsideC0OrShortInG2) {
  // in B, C, F the lowered roots are exactly the long roots outside C0
  for (auto [letter, rank] : std::vector<TypeRank>{{'B', 2}, {'B', 3}, {'B', 4}, {'C', 2}, {'C', 3}, {'C', 4}, {'F', 4}}) {
    const RootSystem rs = build_root_system(letter, rank);
    const HasseData hd = hasse_and_components(rs);
    const ExponentTable t = exponent_table(rs, 2, 1);
    for (int id = 0; id < rs.num_positive(); ++id)
      EXPECT_EQ(t.reduced(id), rs.root(id).is_long() && !hd.in_c0(id)) << letter << rank << " " << id;
  }
}
