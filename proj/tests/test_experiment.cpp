#include <gtest/gtest.h>

#include <sstream>

#include "fixtures.hpp"

using namespace anticoord;

TEST(Seeds, DistinctAndStable) {
  EXPECT_EQ(realization_seed(1, 0, 0), realization_seed(1, 0, 0));
  EXPECT_NE(realization_seed(1, 0, 0), realization_seed(1, 0, 1));
  EXPECT_NE(realization_seed(1, 0, 0), realization_seed(1, 1, 0));
  EXPECT_NE(realization_seed(1, 0, 0), realization_seed(2, 0, 0));
  EXPECT_NE(variant_seed(5, Variant::CP), variant_seed(5, Variant::Rand));
}

TEST(Generator, EdgeCountMean) {
  double total = 0;
  const int reps = 400;
  for (int r = 0; r < reps; ++r) total += static_cast<double>(gen_random_bipartite(20, 0.3, 1000 + r).edges().size());
  EXPECT_NEAR(total / reps, 30.0, 1.5);
}

TEST(Generator, BalancedTypesAndBipartite) {
  Graph g = gen_random_bipartite(10, 0.5, 3);
  EXPECT_EQ(g.players_of_type(0).size(), 5u);
  for (auto [u, v] : g.edges()) EXPECT_NE(g.type(u), g.type(v));
  EXPECT_THROW(gen_random_bipartite(9, 0.5, 3), std::invalid_argument);
  EXPECT_THROW(gen_random_bipartite(10, 1.5, 3), std::invalid_argument);
}

TEST(Generator, SameSeedSameGraph) {
  EXPECT_EQ(gen_random_bipartite(16, 0.4, 9).edges(), gen_random_bipartite(16, 0.4, 9).edges());
  EXPECT_EQ(gen_random_bipartite_coin_types(15, 0.4, 9).edges(), gen_random_bipartite_coin_types(15, 0.4, 9).edges());
}

TEST(Grid, ConstantsSitInTheirCells) {
  auto cs = grid_constants(10);
  ASSERT_EQ(cs.size(), 10u);
  for (std::size_t m = 1; m <= 10; ++m) {
    const double c = cs[m - 1];
    EXPECT_GT(static_cast<double>(m) * c, 1.0);
    EXPECT_LT(static_cast<double>(m - 1) * c, 1.0);
    EXPECT_EQ(grid_cell(c), m);
  }
}

TEST(Experiment, RowCountsAndOrder) {
  ExperimentConfig cfg;
  cfg.mode = ExperimentMode::Grid;
  cfg.n = 10;
  cfg.m_max = 3;
  cfg.reps = 2;
  auto rows = run_experiment(cfg);
  ASSERT_EQ(rows.size(), 9u * 2u * all_variants().size());
  EXPECT_EQ(rows[0].variant, all_variants()[0]);
  EXPECT_EQ(rows[0].m0, 1u);
  EXPECT_EQ(rows.back().m0, 3u);
  EXPECT_EQ(rows.back().m1, 3u);
  for (const auto& r : rows) {
    EXPECT_GE(r.effort, 0.0);
    EXPECT_LE(r.effort, 1.0);
    EXPECT_DOUBLE_EQ(r.effort, static_cast<double>(r.selections) / 10.0);
  }
}

TEST(Experiment, DeterministicAcrossWorkerCounts) {
  ExperimentConfig cfg;
  cfg.mode = ExperimentMode::SizeSweep;
  cfg.sizes = {10, 15, 20};
  cfg.c0 = cfg.c1 = 2.0 / 3.0;
  cfg.reps = 3;
  cfg.seed = 11;
  auto a = run_experiment(cfg);
  cfg.workers = 4;
  auto b = run_experiment(cfg);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t k = 0; k < a.size(); ++k) {
    EXPECT_EQ(a[k].seed, b[k].seed);
    EXPECT_EQ(a[k].selections, b[k].selections);
    EXPECT_EQ(a[k].n, b[k].n);
  }
  EXPECT_DOUBLE_EQ(a.front().p, 6.0 / 10.0);
}

TEST(Experiment, RejectsBadConfig) {
  ExperimentConfig cfg;
  cfg.n = 7;
  EXPECT_THROW(run_experiment(cfg), std::invalid_argument);
  cfg = {};
  cfg.mode = ExperimentMode::SizeSweep;
  cfg.sizes = {5};
  EXPECT_THROW(run_experiment(cfg), std::invalid_argument);
  cfg = {};
  cfg.reps = 0;
  EXPECT_THROW(run_experiment(cfg), std::invalid_argument);
}

TEST(Csv, HeaderAndFields) {
  ExperimentConfig cfg;
  cfg.n = 10;
  cfg.variants = {Variant::VC};
  auto rows = run_experiment(cfg);
  std::ostringstream os;
  write_csv(os, rows);
  std::istringstream is(os.str());
  std::string header, line;
  std::getline(is, header);
  EXPECT_EQ(header, "variant,n,p_B,c0,c1,m0,m1,seed,effort,selections,runtime_ms");
  std::getline(is, line);
  EXPECT_EQ(line.rfind("vc,10,0.29999999999999999,0.5,0.5,3,3,", 0), 0u) << line;
  EXPECT_EQ(std::count(line.begin(), line.end(), ','), 10);
}
