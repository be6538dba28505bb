#include <gtest/gtest.h>

#include "fixtures.hpp"

using namespace anticoord;
using namespace fixtures;

TEST(Elimination, FixtureIsSolvable) {
  auto s = iterated_elimination(fig3(), fig3_constants());
  std::vector<Survivors> want{Survivors::One, Survivors::One, Survivors::One, Survivors::Zero,
                              Survivors::Zero, Survivors::One, Survivors::One, Survivors::One};
  EXPECT_EQ(s, want);
  EXPECT_TRUE(is_dominance_solvable(s));
}

TEST(Elimination, LineInteriorSurvivesBoth) {
  auto s = iterated_elimination(make_benchmark(Topology::Line, 5), {0.6, 0.6});
  EXPECT_EQ(s[0], Survivors::One);
  EXPECT_EQ(s[2], Survivors::Both);
  EXPECT_FALSE(is_dominance_solvable(s));
}

TEST(Elimination, AgreesWithUncontrolledRunWhenSolvable) {
  for (std::uint64_t s = 0; s < 200; ++s) {
    Graph g = gen_random_bipartite(2 + 2 * (s % 6), 0.4, 77 + s);
    auto cs = grid_constants();
    PayoffConstants c(cs[s % 10], cs[(s * 3 + 1) % 10]);
    auto surv = iterated_elimination(g, c);
    if (!is_dominance_solvable(surv)) continue;
    Profile a = converge_held(g, c, all_undecided(g.size()), {}, g.size()).profile;
    for (PlayerId i = 0; i < g.size(); ++i)
      EXPECT_EQ(a[i], surv[i] == Survivors::One ? Action::One : Action::Zero);
  }
}

TEST(BruteStatic, Fixture) {
  StaticSolution s = brute_static(fig3(), fig3_constants());
  EXPECT_EQ(s.cost, 2u);
  EXPECT_EQ(s.policy.forced, zeros({3, 5}));
}

TEST(BruteStatic, StarCenter) {
  StaticSolution s = brute_static(make_benchmark(Topology::Star, 4), {1.5, 0.45});
  EXPECT_EQ(s.cost, 1u);
  EXPECT_EQ(s.policy.forced, zeros({1}));
}

TEST(BruteStatic, NothingNeeded) {
  EXPECT_EQ(brute_static(make_benchmark(Topology::Line, 5), {0.4, 1.5}).cost, 0u);
}

TEST(BruteStatic, SizeLimit) {
  EXPECT_THROW(brute_static(gen_random_bipartite(16, 0.3, 1), {0.5, 0.5}), std::length_error);
}

TEST(BruteDynamic, StarTwoStep) {
  RestrictedDynamicSolution s = brute_dynamic_restricted(make_benchmark(Topology::Star, 4), {1.5, 0.5});
  EXPECT_EQ(s.cost, Rational(2, 4));
  EXPECT_EQ(s.head, zeros({1}));
  EXPECT_TRUE(s.tail.empty());
  EXPECT_TRUE(validate_dynamic(make_benchmark(Topology::Star, 4), {1.5, 0.5}, s.policy).feasible);
}

TEST(BruteDynamic, RingD) {
  Graph g = make_benchmark(Topology::Ring, 8);
  RestrictedDynamicSolution s = brute_dynamic_restricted(g, {0.6, 0.6});
  EXPECT_EQ(s.cost, Rational(1, 2));
  CostReport r = validate_dynamic(g, {0.6, 0.6}, s.policy);
  EXPECT_TRUE(r.feasible);
  EXPECT_EQ(r.dynamic_cost, s.cost);
}

TEST(BruteDynamic, DominanceSolvableNeedsNothing) {
  RestrictedDynamicSolution s = brute_dynamic_restricted(make_benchmark(Topology::Star, 4), {1.5, 0.2});
  EXPECT_EQ(s.cost, Rational(0));
  EXPECT_EQ(s.policy, DynamicPolicy{});
}

TEST(BruteDynamic, NeverAboveTwiceStatic) {
  for (std::uint64_t s = 0; s < 40; ++s) {
    Graph g = gen_random_bipartite(4 + 2 * (s % 3), 0.5, 500 + s);
    auto cs = grid_constants();
    PayoffConstants c(cs[s % 10], cs[(s * 7 + 2) % 10]);
    auto st = brute_static(g, c);
    auto dy = brute_dynamic_restricted(g, c);
    EXPECT_LE(dy.cost, Rational(2 * static_cast<std::int64_t>(st.cost))) << "seed " << s;
    EXPECT_TRUE(validate_dynamic(g, c, dy.policy).feasible) << "seed " << s;
  }
}

TEST(BruteDynamic, SizeLimits) {
  EXPECT_THROW(brute_dynamic_restricted(gen_random_bipartite(12, 0.3, 1), {0.5, 0.5}), std::length_error);
  EXPECT_THROW(brute_dynamic_restricted(Graph({0}, {}), {0.5, 0.5}), std::invalid_argument);
}
