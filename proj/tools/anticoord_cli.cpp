#include <cstdio>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "anticoord/anticoord.hpp"

using namespace anticoord;

namespace {

// Writes to `path`, or to stdout when it is empty.
template <class Fn>
void emit(const std::string& path, Fn&& fn) {
  if (path.empty()) {
    fn(std::cout);
    return;
  }
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot open '" + path + "' for writing");
  fn(f);
}

json solve(const Graph& g, const PayoffConstants& c, const std::string& method, std::uint64_t seed, bool deterministic) {
  json out = {{"method", method}};
  if (method == "exact") {
    auto s = brute_static(g, c);
    out["policy"] = policy_to_json(s.policy);
    out["report"] = report_to_json(validate_static(g, c, s.policy));
    return out;
  }
  if (method == "exact-dyn") {
    auto s = brute_dynamic_restricted(g, c);
    out["policy"] = policy_to_json(s.policy);
    out["report"] = report_to_json(validate_dynamic(g, c, s.policy));
    return out;
  }
  GreedyResult r = run_greedy(g, c, {parse_variant(method), seed, deterministic});
  out["selected"] = r.controlled;
  out["effort"] = to_double(control_effort(r, std::max<std::size_t>(g.size(), 1)));
  out["convergence_times"] = r.convergence_times;
  out["policy"] = policy_to_json(r.static_policy);
  out["report"] = report_to_json(validate_static(g, c, r.static_policy));
  out["dynamic_policy"] = policy_to_json(r.dynamic_policy);
  out["dynamic_report"] = report_to_json(validate_dynamic(g, c, r.dynamic_policy));
  if (r.variant == Variant::VC) {
    auto vc = solve_vertex_cover(g, c);
    out["cover"] = vc.cover;
    out["rho_positive"] = vc.rho_positive;
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Controlled learning dynamics for anti-coordination games"};
  app.require_subcommand(1);

  std::string graph_path, out_path, policy_path, method = "cp";
  double c0 = 0.5, c1 = 0.5;
  std::size_t horizon = 0;
  std::uint64_t seed = 1;
  bool deterministic = false;

  auto* sim = app.add_subcommand("simulate", "Run the learning dynamics and print the trajectory as JSON lines");
  sim->add_option("--graph", graph_path, "Graph JSON file")->required()->check(CLI::ExistingFile);
  sim->add_option("--c0", c0, "Payoff constant of type 0")->required();
  sim->add_option("--c1", c1, "Payoff constant of type 1")->required();
  sim->add_option("--policy", policy_path, "Policy JSON file")->check(CLI::ExistingFile);
  sim->add_option("--horizon", horizon, "Steps to record (default n)");
  sim->add_option("--out", out_path, "Output file (default stdout)");

  auto* sol = app.add_subcommand("solve", "Compute a control policy and its cost report");
  sol->add_option("--graph", graph_path, "Graph JSON file")->required()->check(CLI::ExistingFile);
  sol->add_option("--c0", c0, "Payoff constant of type 0")->required();
  sol->add_option("--c1", c1, "Payoff constant of type 1")->required();
  sol->add_option("--method", method, "cp, cp2, maxdeg, rand, vc, exact or exact-dyn")
      ->check(CLI::IsMember({"cp", "cp2", "maxdeg", "rand", "vc", "exact", "exact-dyn"}));
  sol->add_option("--seed", seed, "Tie-break seed");
  sol->add_flag("--deterministic", deterministic, "Break ties by lowest index, Zero first");
  sol->add_option("--out", out_path, "Output file (default stdout)");

  ExperimentConfig cfg;
  std::string config_path, mode, variants;
  bool grid = false;
  auto* sw = app.add_subcommand("sweep", "Run a batch of greedy experiments and write CSV");
  sw->add_option("--config", config_path, "JSON config; flags given on the command line override it")
      ->check(CLI::ExistingFile);
  sw->add_option("--mode", mode, "grid, size_sweep or single");
  sw->add_flag("--grid", grid, "Shorthand for --mode grid");
  sw->add_option("--n", cfg.n, "Players (grid and single)");
  sw->add_option("--p", cfg.p, "Edge probability (grid and single)");
  sw->add_option("--c0", cfg.c0, "Payoff constant of type 0 (single and size_sweep)");
  sw->add_option("--c1", cfg.c1, "Payoff constant of type 1 (single and size_sweep)");
  sw->add_option("--m-max", cfg.m_max, "Grid cells per axis");
  sw->add_option("--sizes", cfg.sizes, "Network sizes for size_sweep (default 10..70 step 5)");
  sw->add_option("--degree-scale", cfg.degree_scale, "size_sweep edge probability is this over N");
  sw->add_option("--variants", variants, "Comma-separated list, default all");
  sw->add_option("--reps", cfg.reps, "Realizations per cell");
  sw->add_option("--seed", cfg.seed, "Master seed");
  sw->add_option("--workers", cfg.workers, "Worker threads");
  sw->add_flag("--deterministic", cfg.deterministic, "Deterministic tie-breaking");
  sw->add_option("--out", cfg.out, "CSV file (default stdout)");

  std::string bench_json;
  auto* bv = app.add_subcommand("bench-verify", "Check the closed-form benchmark policies against exhaustive search");
  bv->add_option("--json", bench_json, "Also write discrepancy records to this file");

  std::size_t gen_n = 20;
  double gen_p = 0.3;
  bool coin = false;
  auto* gen = app.add_subcommand("generate", "Write a random bipartite graph as JSON");
  gen->add_option("--n", gen_n, "Players");
  gen->add_option("--p", gen_p, "Edge probability");
  gen->add_option("--seed", seed, "Seed");
  gen->add_flag("--coin-types", coin, "Draw each type by a fair coin instead of an even split");
  gen->add_option("--out", out_path, "Output file (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (sim->parsed()) {
      Graph g = graph_from_json(read_json_file(graph_path));
      PayoffConstants c(c0, c1);
      DynamicPolicy p = policy_path.empty() ? DynamicPolicy{} : policy_from_json(read_json_file(policy_path));
      Trajectory tr = controlled_run(g, c, all_undecided(g.size()), p, sim->count("--horizon") ? horizon : g.size());
      emit(out_path, [&](std::ostream& os) { write_trajectory(os, tr); });
      return 0;
    }
    if (sol->parsed()) {
      Graph g = graph_from_json(read_json_file(graph_path));
      json out = solve(g, PayoffConstants(c0, c1), method, seed, deterministic);
      emit(out_path, [&](std::ostream& os) { os << out.dump(2) << '\n'; });
      return 0;
    }
    if (sw->parsed()) {
      ExperimentConfig base;
      if (!config_path.empty()) base = config_from_json(read_json_file(config_path));
      // Flags override the file only when given.
      auto given = [&](const char* flag) { return sw->count(flag) > 0; };
      if (given("--n")) base.n = cfg.n;
      if (given("--p")) base.p = cfg.p;
      if (given("--c0")) base.c0 = cfg.c0;
      if (given("--c1")) base.c1 = cfg.c1;
      if (given("--m-max")) base.m_max = cfg.m_max;
      if (given("--sizes")) base.sizes = cfg.sizes;
      if (given("--degree-scale")) base.degree_scale = cfg.degree_scale;
      if (given("--reps")) base.reps = cfg.reps;
      if (given("--seed")) base.seed = cfg.seed;
      if (given("--workers")) base.workers = cfg.workers;
      if (given("--out")) base.out = cfg.out;
      if (cfg.deterministic) base.deterministic = true;
      if (!mode.empty()) base.mode = mode_from_string(mode);
      if (grid) base.mode = ExperimentMode::Grid;
      if (!variants.empty()) {
        base.variants.clear();
        std::stringstream ss(variants);
        for (std::string v; std::getline(ss, v, ',');) base.variants.push_back(parse_variant(v));
      }
      if (base.mode == ExperimentMode::SizeSweep && base.sizes.empty()) base.sizes = default_sweep_sizes();
      auto rows = run_experiment(base);
      if (base.out.empty())
        write_csv(std::cout, rows);
      else
        write_csv(base.out, rows);
      return 0;
    }
    if (bv->parsed()) {
      auto rows = verify_benchmarks();
      json records = json::array();
      std::size_t bad = 0;
      for (const auto& r : rows) {
        std::printf("%-4s n=%-2zu %c c0=%-8.4g c1=%-8.4g static %zu/%zu  dynamic %s (stated %s, two-phase %s)  %s\n",
                    topology_name(r.kind).c_str(), r.n, r.regime, r.constants.c0, r.constants.c1, r.static_cost,
                    r.static_brute, rational_string(r.dynamic_cost).c_str(), rational_string(r.dynamic_predicted).c_str(),
                    rational_string(r.dynamic_brute).c_str(), r.ok() ? "PASS" : "FAIL");
        if (r.ok()) continue;
        ++bad;
        for (const auto& d : r.discrepancies) std::printf("      %s\n", d.c_str());
        const Graph g = make_benchmark(r.kind, r.n);
        records.push_back({{"kind", topology_name(r.kind)},
                           {"n", r.n},
                           {"regime", std::string(1, r.regime)},
                           {"c0", r.constants.c0},
                           {"c1", r.constants.c1},
                           {"graph", graph_to_json(g)},
                           {"static", {{"closed_form", policy_to_json(closed_form_static(r.kind, r.n, r.constants).policy)},
                                       {"closed_form_cost", r.static_cost},
                                       {"exhaustive", policy_to_json(r.static_brute_policy)},
                                       {"exhaustive_cost", r.static_brute}}},
                           {"dynamic", {{"closed_form", policy_to_json(closed_form_dynamic(r.kind, r.n, r.constants).policy)},
                                        {"closed_form_feasible", r.dynamic_feasible},
                                        {"closed_form_cost", rational_string(r.dynamic_cost)},
                                        {"stated_cost", rational_string(r.dynamic_predicted)},
                                        {"two_phase", policy_to_json(r.dynamic_brute_policy)},
                                        {"two_phase_cost", rational_string(r.dynamic_brute)}}},
                           {"discrepancies", r.discrepancies}});
      }
      std::printf("%zu of %zu rows pass\n", rows.size() - bad, rows.size());
      if (!bench_json.empty()) emit(bench_json, [&](std::ostream& os) { os << records.dump(2) << '\n'; });
      return bad == 0 ? 0 : 1;
    }
    if (gen->parsed()) {
      Graph g = coin ? gen_random_bipartite_coin_types(gen_n, gen_p, seed) : gen_random_bipartite(gen_n, gen_p, seed);
      emit(out_path, [&](std::ostream& os) { os << graph_to_json(g).dump() << '\n'; });
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
