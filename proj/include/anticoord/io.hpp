#pragma once

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "anticoord/experiment.hpp"
#include "json.hpp"

namespace anticoord {

using json = nlohmann::json;

// {"n": N, "types": [...], "edges": [[i, j], ...]} with 0-based ids.
inline Graph graph_from_json(const json& j) {
  if (!j.is_object()) throw std::invalid_argument("graph JSON must be an object");
  for (const char* key : {"n", "types", "edges"})
    if (!j.contains(key)) throw std::invalid_argument(std::string("graph JSON is missing \"") + key + "\"");
  const auto n = j.at("n").get<std::size_t>();
  auto types = j.at("types").get<std::vector<int>>();
  if (types.size() != n)
    throw std::invalid_argument("graph JSON has n=" + std::to_string(n) + " but " + std::to_string(types.size()) + " types");
  std::vector<Edge> edges;
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2) throw std::invalid_argument("edge entry " + e.dump() + " is not a pair");
    edges.emplace_back(e[0].get<PlayerId>(), e[1].get<PlayerId>());
  }
  return Graph(std::move(types), std::move(edges));
}

inline json graph_to_json(const Graph& g) {
  json edges = json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  return {{"n", g.size()}, {"types", g.types()}, {"edges", edges}};
}

inline json action_to_json(Action a) {
  if (a == Action::Undecided) return "e";
  return a == Action::One ? 1 : 0;
}

inline Action action_from_json(const json& j) {
  if (j.is_string() && j.get<std::string>() == "e") return Action::Undecided;
  if (j.is_number_integer()) {
    auto v = j.get<int>();
    if (v == 0) return Action::Zero;
    if (v == 1) return Action::One;
  }
  throw std::invalid_argument("action must be 0, 1 or \"e\", got " + j.dump());
}

inline json profile_to_json(const Profile& a) {
  json out = json::array();
  for (Action x : a) out.push_back(action_to_json(x));
  return out;
}

inline Profile profile_from_json(const json& j) {
  Profile a;
  for (const auto& x : j) a.push_back(action_from_json(x));
  return a;
}

inline json forcing_to_json(const Forcing& x) {
  json forced = json::object();
  for (auto [i, d] : x) forced[std::to_string(i)] = d == Action::One ? 1 : 0;
  return {{"controlled", controlled_set(x)}, {"forced", forced}};
}

inline Forcing forcing_from_json(const json& j) {
  Forcing x;
  if (!j.contains("forced")) throw std::invalid_argument("forcing entry is missing \"forced\"");
  for (auto it = j.at("forced").begin(); it != j.at("forced").end(); ++it) {
    PlayerId id = 0;
    try {
      id = std::stoul(it.key());
    } catch (const std::exception&) {
      throw std::invalid_argument("forced key '" + it.key() + "' is not a player id");
    }
    const int v = it.value().get<int>();
    if (v != 0 && v != 1) throw std::invalid_argument("player " + it.key() + " forced to " + it.value().dump() + ", expected 0 or 1");
    x[id] = v ? Action::One : Action::Zero;
  }
  if (j.contains("controlled")) {
    auto listed = j.at("controlled").get<std::vector<PlayerId>>();
    std::sort(listed.begin(), listed.end());
    if (listed != controlled_set(x)) throw std::invalid_argument("\"controlled\" does not match the keys of \"forced\"");
  }
  return x;
}

inline json policy_to_json(const StaticPolicy& p) { return {{"static", forcing_to_json(p.forced)}}; }

inline json policy_to_json(const DynamicPolicy& p) {
  json head = json::array();
  for (const auto& x : p.head) head.push_back(forcing_to_json(x));
  return {{"dynamic", {{"head", head}, {"tail", forcing_to_json(p.tail)}}}};
}

// A static policy is read as the dynamic policy that holds it forever.
inline DynamicPolicy policy_from_json(const json& j) {
  if (j.contains("static")) return hold_forever(StaticPolicy{forcing_from_json(j.at("static"))});
  if (j.contains("dynamic")) {
    const auto& d = j.at("dynamic");
    DynamicPolicy p;
    for (const auto& x : d.value("head", json::array())) p.head.push_back(forcing_from_json(x));
    if (d.contains("tail")) p.tail = forcing_from_json(d.at("tail"));
    return p;
  }
  throw std::invalid_argument("policy JSON needs a \"static\" or \"dynamic\" member");
}

inline std::string rational_string(const Rational& r) {
  return r.denominator() == 1 ? std::to_string(r.numerator())
                              : std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

inline json report_to_json(const CostReport& r) {
  json out = {{"static_cost", r.static_cost},
              {"dynamic_cost", rational_string(r.dynamic_cost)},
              {"dynamic_cost_value", to_double(r.dynamic_cost)},
              {"feasible", r.feasible}};
  if (r.witness) {
    json w = {{"time", r.witness->time}};
    if (r.witness->edge) w["edge"] = {r.witness->edge->first, r.witness->edge->second};
    if (r.witness->player) w["player"] = *r.witness->player;
    out["witness"] = w;
  }
  return out;
}

// One JSON object per line: {"t": k, "actions": [...]}.
inline void write_trajectory(std::ostream& os, const Trajectory& tr) {
  for (std::size_t t = 0; t < tr.profiles.size(); ++t)
    os << json{{"t", t}, {"actions", profile_to_json(tr.profiles[t])}}.dump() << '\n';
}

inline json read_json_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open '" + path + "'");
  try {
    return json::parse(f);
  } catch (const json::parse_error& e) {
    throw std::runtime_error("'" + path + "' is not valid JSON: " + e.what());
  }
}

inline ExperimentMode mode_from_string(const std::string& s) {
  if (s == "grid") return ExperimentMode::Grid;
  if (s == "size_sweep" || s == "sweep") return ExperimentMode::SizeSweep;
  if (s == "single") return ExperimentMode::Single;
  throw std::invalid_argument("unknown mode '" + s + "' (expected grid, size_sweep or single)");
}

// Keys mirror the command-line flags; anything absent keeps its default.
inline ExperimentConfig config_from_json(const json& j, ExperimentConfig cfg = {}) {
  if (j.contains("mode")) cfg.mode = mode_from_string(j.at("mode").get<std::string>());
  if (j.contains("grid") && j.at("grid").get<bool>()) cfg.mode = ExperimentMode::Grid;
  cfg.n = j.value("n", cfg.n);
  cfg.p = j.value("p", cfg.p);
  cfg.c0 = j.value("c0", cfg.c0);
  cfg.c1 = j.value("c1", cfg.c1);
  cfg.m_max = j.value("m_max", cfg.m_max);
  cfg.sizes = j.value("sizes", cfg.sizes);
  cfg.degree_scale = j.value("degree_scale", cfg.degree_scale);
  if (j.contains("variants")) {
    cfg.variants.clear();
    for (const auto& v : j.at("variants")) cfg.variants.push_back(parse_variant(v.get<std::string>()));
  }
  cfg.reps = j.value("reps", cfg.reps);
  cfg.seed = j.value("seed", cfg.seed);
  cfg.workers = j.value("workers", cfg.workers);
  cfg.deterministic = j.value("deterministic", cfg.deterministic);
  cfg.out = j.value("out", cfg.out);
  return cfg;
}

}  // namespace anticoord
