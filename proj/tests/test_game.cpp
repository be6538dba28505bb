#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"

using namespace anticoord;
using namespace fixtures;

namespace {

// One player of the given type with `k` neighbors of the other type.
Graph fan(int center_type, std::size_t k) {
  std::vector<int> types(k + 1, 1 - center_type);
  types[0] = center_type;
  std::vector<Edge> e;
  for (PlayerId i = 1; i <= k; ++i) e.emplace_back(0, i);
  return Graph(types, e);
}

Profile with_center(Action center, std::size_t k, Action rest) {
  Profile a(k + 1, rest);
  a[0] = center;
  return a;
}

}  // namespace

TEST(Graph, RejectsSameTypeEdge) {
  try {
    Graph({0, 0}, {{0, 1}});
    FAIL();
  } catch (const std::invalid_argument& e) {
    EXPECT_NE(std::string(e.what()).find("(0,1)"), std::string::npos);
  }
}

TEST(Graph, RejectsSelfLoopDuplicateAndRange) {
  EXPECT_THROW(Graph({0, 1}, {{1, 1}}), std::invalid_argument);
  EXPECT_THROW(Graph({0, 1}, {{0, 1}, {1, 0}}), std::invalid_argument);
  EXPECT_THROW(Graph({0, 1}, {{0, 2}}), std::invalid_argument);
  EXPECT_THROW(Graph({0, 2}, {}), std::invalid_argument);
}

TEST(Graph, NeighborsMatchEdges) {
  Graph g = fig3();
  EXPECT_EQ(g.size(), 8u);
  auto nb = g.neighbors(p(4));
  EXPECT_EQ(std::vector<PlayerId>(nb.begin(), nb.end()), ids({6, 7, 8}));
  EXPECT_EQ(g.degree(p(5)), 3u);
  EXPECT_EQ(g.players_of_type(0), ids({5, 6, 7, 8}));
}

TEST(Constants, RejectNonPositive) {
  EXPECT_THROW(PayoffConstants(0.0, 1.0), std::invalid_argument);
  EXPECT_THROW(PayoffConstants(1.0, -2.0), std::invalid_argument);
  EXPECT_NO_THROW(PayoffConstants(3.0, 7.0));
}

TEST(Utility, DirectSubstitution) {
  Graph g0 = fan(0, 3);
  EXPECT_NEAR(utility(g0, {0.4, 0.9}, with_center(Action::One, 3, Action::One), 0), -0.2, 1e-12);
  EXPECT_EQ(utility(g0, {0.4, 0.9}, with_center(Action::Zero, 3, Action::One), 0), 0.0);
  Graph g1 = fan(1, 1);
  EXPECT_NEAR(utility(g1, {0.9, 0.6}, with_center(Action::One, 1, Action::One), 0), 0.4, 1e-12);
}

TEST(Utility, UndecidedIsAnError) {
  Graph g = fan(0, 2);
  EXPECT_THROW(utility(g, {0.4, 0.4}, with_center(Action::One, 2, Action::Undecided), 0), std::invalid_argument);
}

TEST(BestResponse, Examples) {
  // Player 6 of the fixture: degree 2, both neighbors One.
  Profile a = prof("11100111");
  EXPECT_EQ(best_response(fig3(), fig3_constants(), a, p(6)), Action::One);
  // Player 4: three One neighbors.
  EXPECT_EQ(best_response(fig3(), fig3_constants(), prof("11110111"), p(4)), Action::Zero);
  // Exactly on the boundary resolves to Zero.
  Graph g = fan(0, 2);
  EXPECT_EQ(best_response(g, {0.5, 0.5}, with_center(Action::One, 2, Action::One), 0), Action::Zero);
}

TEST(ActiveEdges, Examples) {
  Graph g = fig3();
  EXPECT_EQ(active_edges(g, prof("11100111")), (std::vector<Edge>{{p(3), p(6)}}));
  EXPECT_EQ(active_edges(g, all_undecided(8)), g.edges());
  EXPECT_TRUE(active_edges(g, Profile(8, Action::Zero)).empty());
}

TEST(MaxAnticoordination, Examples) {
  Graph star({1, 0, 0, 0}, {{0, 1}, {0, 2}, {0, 3}});
  EXPECT_TRUE(is_max_anticoordination(star, prof("0111")));
  EXPECT_FALSE(is_max_anticoordination(fig3(), prof("11100111")));
  EXPECT_FALSE(is_max_anticoordination(star, prof("0e11")));
}

TEST(Nash, LineOfFour) {
  // Types 0,1,0,1 with c0=0.4, c1=0.6. In (1,0,1,0) endpoint 4 sees one One
  // neighbor, 0.6 < 1, so it would rather play One.
  Graph line({0, 1, 0, 1}, {{0, 1}, {1, 2}, {2, 3}});
  PayoffConstants c(0.4, 0.6);
  EXPECT_FALSE(is_nash(line, c, prof("1010")));
  EXPECT_EQ(best_response(line, c, prof("1010"), p(4)), Action::One);
  EXPECT_TRUE(is_nash(line, c, prof("1011")));
}

TEST(Nash, FixtureAndEmptyGraph) {
  EXPECT_FALSE(is_nash(fig3(), fig3_constants(), prof("11000111")));
  EXPECT_EQ(best_response(fig3(), fig3_constants(), prof("11000111"), p(3)), Action::One);
  EXPECT_TRUE(is_nash(fig3(), fig3_constants(), prof("11100111")));
  Graph empty({0, 1, 0}, {});
  EXPECT_TRUE(is_nash(empty, {0.5, 0.5}, prof("111")));
}

TEST(Properties, BestResponseMaximizesUtility) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    std::size_t n = 2 + rng() % 10;
    std::vector<int> types(n);
    for (auto& s : types) s = static_cast<int>(rng() % 2);
    std::vector<Edge> e;
    for (PlayerId i = 0; i < n; ++i)
      for (PlayerId j = i + 1; j < n; ++j)
        if (types[i] != types[j] && rng() % 2) e.emplace_back(i, j);
    Graph g(types, e);
    PayoffConstants c(0.1 + (rng() % 20) * 0.1, 0.1 + (rng() % 20) * 0.1);
    Profile a(n);
    for (auto& x : a) x = rng() % 2 ? Action::One : Action::Zero;
    for (PlayerId i = 0; i < n; ++i) {
      Profile b = a;
      b[i] = best_response(g, c, a, i);
      Profile other = a;
      other[i] = b[i] == Action::One ? Action::Zero : Action::One;
      EXPECT_GE(utility(g, c, b, i), utility(g, c, other, i));
    }
    int products = 0;
    for (auto [u, v] : g.edges()) products += floor_value(a[u]) * floor_value(a[v]);
    EXPECT_EQ(is_max_anticoordination(g, a), products == 0);
  }
}
