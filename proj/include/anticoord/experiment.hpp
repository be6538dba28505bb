#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "anticoord/greedy.hpp"

namespace anticoord {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

// Seed of realization `rep` in cell `cell`. Depends only on the counters, so the
// order in which workers pick up jobs cannot change it.
inline std::uint64_t realization_seed(std::uint64_t master, std::uint64_t cell, std::uint64_t rep) {
  return splitmix64(master ^ splitmix64((cell << 32) ^ rep));
}

inline std::uint64_t variant_seed(std::uint64_t realization, Variant v) {
  return splitmix64(realization + 1 + static_cast<std::uint64_t>(v));
}

namespace detail {

inline double unit_draw(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

inline Graph random_edges(std::vector<int> types, double p, std::mt19937_64& rng) {
  std::vector<Edge> edges;
  const std::size_t n = types.size();
  for (PlayerId i = 0; i < n; ++i)
    for (PlayerId j = i + 1; j < n; ++j)
      if (types[i] != types[j] && unit_draw(rng) < p) edges.emplace_back(i, j);
  return Graph(std::move(types), std::move(edges));
}

inline void check_probability(double p) {
  if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("edge probability must lie in (0,1), got " + std::to_string(p));
}

}  // namespace detail

// Players 0..n/2-1 are type 0, the rest type 1; every cross pair is an edge with probability p.
inline Graph gen_random_bipartite(std::size_t n, double p, std::uint64_t seed) {
  if (n % 2 != 0) throw std::invalid_argument("gen_random_bipartite needs an even n, got " + std::to_string(n));
  detail::check_probability(p);
  std::vector<int> types(n, 0);
  std::fill(types.begin() + static_cast<std::ptrdiff_t>(n / 2), types.end(), 1);
  std::mt19937_64 rng(seed);
  return detail::random_edges(std::move(types), p, rng);
}

// Each player's type is a fair coin flip; any n.
inline Graph gen_random_bipartite_coin_types(std::size_t n, double p, std::uint64_t seed) {
  detail::check_probability(p);
  std::mt19937_64 rng(seed);
  std::vector<int> types(n);
  for (auto& s : types) s = static_cast<int>(rng() >> 63);
  return detail::random_edges(std::move(types), p, rng);
}

// Cell midpoints: m c > 1 > (m-1) c.
inline std::vector<double> grid_constants(std::size_t m_max = 10) {
  std::vector<double> out;
  for (std::size_t m = 1; m <= m_max; ++m) out.push_back(2.0 / (2.0 * static_cast<double>(m) - 1.0));
  return out;
}

// Grid cell of a constant: the m with m c > 1 > (m-1) c.
inline std::size_t grid_cell(double c) { return static_cast<std::size_t>(std::floor(1.0 / c)) + 1; }

enum class ExperimentMode { Grid, SizeSweep, Single };

struct ExperimentConfig {
  ExperimentMode mode = ExperimentMode::Single;
  std::size_t n = 20;
  double p = 0.3;
  double c0 = 0.5, c1 = 0.5;
  std::size_t m_max = 10;                 // grid mode
  std::vector<std::size_t> sizes;         // size sweep; p is then degree_scale / N
  double degree_scale = 6.0;
  std::vector<Variant> variants = all_variants();
  std::size_t reps = 1;
  std::uint64_t seed = 1;
  std::size_t workers = 1;
  bool deterministic = false;
  std::string out;

  void validate() const {
    if (reps < 1) throw std::invalid_argument("reps must be at least 1");
    if (variants.empty()) throw std::invalid_argument("no variants requested");
    if (mode == ExperimentMode::SizeSweep) {
      if (sizes.empty()) throw std::invalid_argument("size sweep needs at least one size");
      for (std::size_t s : sizes)
        if (!(degree_scale > 0 && degree_scale < static_cast<double>(s)))
          throw std::invalid_argument("degree scale " + std::to_string(degree_scale) + " gives p outside (0,1) at N=" + std::to_string(s));
    } else {
      if (n % 2 != 0) throw std::invalid_argument("grid and single modes need an even n");
      detail::check_probability(p);
    }
    if (mode == ExperimentMode::Single) PayoffConstants(c0, c1);
    if (mode == ExperimentMode::Grid && m_max < 1) throw std::invalid_argument("grid needs m_max >= 1");
  }
};

inline std::vector<std::size_t> default_sweep_sizes() {
  std::vector<std::size_t> s;
  for (std::size_t n = 10; n <= 70; n += 5) s.push_back(n);
  return s;
}

struct ExperimentRow {
  Variant variant = Variant::CP;
  std::size_t n = 0;
  double p = 0;
  double c0 = 0, c1 = 0;
  std::size_t m0 = 0, m1 = 0;
  std::uint64_t seed = 0;
  double effort = 0;
  std::size_t selections = 0;
  double runtime_ms = 0;
};

namespace detail {

struct Cell {
  std::size_t n;
  double p;
  double c0, c1;
  std::size_t m0, m1;
};

inline std::vector<Cell> cells_of(const ExperimentConfig& cfg) {
  std::vector<Cell> cells;
  switch (cfg.mode) {
    case ExperimentMode::Grid: {
      auto cs = grid_constants(cfg.m_max);
      for (std::size_t a = 0; a < cs.size(); ++a)
        for (std::size_t b = 0; b < cs.size(); ++b) cells.push_back({cfg.n, cfg.p, cs[a], cs[b], a + 1, b + 1});
      break;
    }
    case ExperimentMode::SizeSweep:
      for (std::size_t s : cfg.sizes)
        cells.push_back({s, cfg.degree_scale / static_cast<double>(s), cfg.c0, cfg.c1, grid_cell(cfg.c0), grid_cell(cfg.c1)});
      break;
    case ExperimentMode::Single:
      cells.push_back({cfg.n, cfg.p, cfg.c0, cfg.c1, grid_cell(cfg.c0), grid_cell(cfg.c1)});
      break;
  }
  return cells;
}

}  // namespace detail

// Rows come out ordered by (cell, rep, variant) whatever the worker count.
inline std::vector<ExperimentRow> run_experiment(const ExperimentConfig& cfg) {
  cfg.validate();
  const auto cells = detail::cells_of(cfg);
  const std::size_t jobs = cells.size() * cfg.reps;
  const std::size_t nv = cfg.variants.size();
  std::vector<ExperimentRow> rows(jobs * nv);

  auto work = [&](std::size_t job) {
    const std::size_t ci = job / cfg.reps, rep = job % cfg.reps;
    const auto& cell = cells[ci];
    const std::uint64_t seed = realization_seed(cfg.seed, ci, rep);
    const Graph g = cfg.mode == ExperimentMode::SizeSweep ? gen_random_bipartite_coin_types(cell.n, cell.p, seed)
                                                          : gen_random_bipartite(cell.n, cell.p, seed);
    const PayoffConstants c(cell.c0, cell.c1);
    for (std::size_t v = 0; v < nv; ++v) {
      const auto t0 = std::chrono::steady_clock::now();
      GreedyResult r = run_greedy(g, c, {cfg.variants[v], variant_seed(seed, cfg.variants[v]), cfg.deterministic});
      const auto t1 = std::chrono::steady_clock::now();
      rows[job * nv + v] = {cfg.variants[v], cell.n, cell.p, cell.c0, cell.c1, cell.m0, cell.m1, seed,
                            to_double(control_effort(r, cell.n)), r.controlled.size(),
                            std::chrono::duration<double, std::milli>(t1 - t0).count()};
    }
  };

  const std::size_t workers = std::max<std::size_t>(1, std::min(cfg.workers, jobs));
  if (workers == 1) {
    for (std::size_t j = 0; j < jobs; ++j) work(j);
    return rows;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (std::size_t j; !failed && (j = next++) < jobs;) {
        try {
          work(j);
        } catch (...) {
          if (!failed.exchange(true)) failure = std::current_exception();
        }
      }
    });
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  return rows;
}

inline const char* csv_header() { return "variant,n,p_B,c0,c1,m0,m1,seed,effort,selections,runtime_ms"; }

inline void write_csv(std::ostream& os, const std::vector<ExperimentRow>& rows) {
  os << csv_header() << '\n';
  std::ostringstream line;
  line << std::setprecision(17);
  for (const auto& r : rows) {
    line.str("");
    line << variant_name(r.variant) << ',' << r.n << ',' << r.p << ',' << r.c0 << ',' << r.c1 << ',' << r.m0 << ','
         << r.m1 << ',' << r.seed << ',' << r.effort << ',' << r.selections << ',' << std::setprecision(6)
         << r.runtime_ms << std::setprecision(17);
    os << line.str() << '\n';
  }
}

inline void write_csv(const std::string& path, const std::vector<ExperimentRow>& rows) {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot open '" + path + "' for writing");
  write_csv(f, rows);
  if (!f) throw std::runtime_error("write to '" + path + "' failed");
}

}  // namespace anticoord
