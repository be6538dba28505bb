#pragma once

#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "anticoord/vertex_cover.hpp"

namespace anticoord {

enum class Variant { CP, CP2, MaxDegree, Rand, VC };

inline const std::vector<Variant>& all_variants() {
  static const std::vector<Variant> v{Variant::CP, Variant::CP2, Variant::MaxDegree, Variant::Rand, Variant::VC};
  return v;
}

inline std::string variant_name(Variant v) {
  switch (v) {
    case Variant::CP: return "cp";
    case Variant::CP2: return "cp2";
    case Variant::MaxDegree: return "maxdeg";
    case Variant::Rand: return "rand";
    default: return "vc";
  }
}

inline Variant parse_variant(const std::string& s) {
  for (Variant v : all_variants())
    if (variant_name(v) == s) return v;
  throw std::invalid_argument("unknown variant '" + s + "' (expected cp, cp2, maxdeg, rand or vc)");
}

struct GreedyOptions {
  Variant variant = Variant::CP;
  std::uint64_t seed = 0;
  bool deterministic = false;  // lowest index wins ties, Zero before One
};

struct GreedyResult {
  Variant variant = Variant::CP;
  std::vector<PlayerId> controlled;  // in selection order
  Forcing forced;
  // Convergence time of the run from all-Undecided before the first selection and
  // after each one.
  std::vector<std::size_t> convergence_times;
  StaticPolicy static_policy;
  DynamicPolicy dynamic_policy;
};

inline Rational control_effort(const GreedyResult& r, std::size_t n) {
  if (n == 0) throw std::invalid_argument("control_effort needs n > 0");
  return Rational(static_cast<std::int64_t>(r.controlled.size()), static_cast<std::int64_t>(n));
}

// Drop in active edges when player i alone is held at d, starting from profile a.
inline long cascade_potential(const Graph& g, const PayoffConstants& c, const Profile& a, PlayerId i, Action d) {
  check_profile(g, a);
  if (i >= g.size()) throw std::invalid_argument("player " + std::to_string(i) + " is not in the graph");
  Profile after = converge_held(g, c, a, Forcing{{i, d}}, g.size()).profile;
  return static_cast<long>(active_edges(g, a).size()) - static_cast<long>(active_edges(g, after).size());
}

namespace detail {

struct Candidate {
  PlayerId player;
  Action action;
  long score;
};

inline std::size_t count_changes(const Profile& a, const Profile& b) {
  std::size_t k = 0;
  for (std::size_t i = 0; i < a.size(); ++i) k += a[i] != b[i];
  return k;
}

// Windows of X-hat(k) lasting t_k steps, then X-hat held for good. The tail starts
// no later than n - t_K: from any state, holding X-hat reaches its fixed point
// within t_K steps, so everything from n on is anti-coordinated.
inline DynamicPolicy staged_policy(const std::vector<Forcing>& stages, const std::vector<std::size_t>& times,
                                   std::size_t n) {
  const std::size_t last = stages.size() - 1;
  std::size_t start = 0;
  for (std::size_t k = 0; k < last; ++k) start += times[k];
  start = std::min(start, n >= times[last] ? n - times[last] : 0);
  DynamicPolicy p{{}, stages[last]};
  for (std::size_t k = 0; k < last && p.head.size() < start; ++k)
    for (std::size_t t = 0; t < times[k] && p.head.size() < start; ++t) p.head.push_back(stages[k]);
  return normalized(p);
}

}  // namespace detail

inline GreedyResult run_greedy(const Graph& g, const PayoffConstants& c, const GreedyOptions& opt) {
  const std::size_t n = g.size();
  GreedyResult res;
  res.variant = opt.variant;
  std::mt19937_64 rng(opt.seed);

  Convergence cur = converge_held(g, c, all_undecided(n), {}, n);
  res.convergence_times.push_back(cur.time);

  if (opt.variant == Variant::VC) {
    ResidualGraph r = make_residual(g, cur.profile);
    auto cover = min_vertex_cover(r);
    auto rho = compute_rho_positive(g, c, r, cover);
    for (auto* set : {&cover, &rho})
      for (PlayerId p : *set) {
        res.controlled.push_back(p);
        res.forced[p] = Action::Zero;
      }
    if (!res.forced.empty()) res.convergence_times.push_back(converge_held(g, c, all_undecided(n), res.forced, n).time);
    res.static_policy = StaticPolicy{res.forced};
    res.dynamic_policy = assemble_pi_v(g, c, r, cover, rho);
    return res;
  }

  auto pick = [&](const std::vector<detail::Candidate>& cands) {
    long top = cands.front().score;
    for (const auto& x : cands) top = std::max(top, x.score);
    std::vector<std::size_t> best;
    for (std::size_t k = 0; k < cands.size(); ++k)
      if (cands[k].score == top) best.push_back(k);
    if (opt.deterministic || best.size() == 1) return cands[best.front()];
    return cands[best[std::uniform_int_distribution<std::size_t>(0, best.size() - 1)(rng)]];
  };

  std::vector<Forcing> stages{res.forced};
  for (auto active = active_edges(g, cur.profile); !active.empty(); active = active_edges(g, cur.profile)) {
    if (res.controlled.size() >= n) throw std::logic_error("greedy made n selections and edges are still active");
    std::vector<char> on_active(n, 0);
    for (auto [u, v] : active) on_active[u] = on_active[v] = 1;
    std::vector<detail::Candidate> cands;

    if (opt.variant == Variant::CP || opt.variant == Variant::CP2) {
      std::vector<detail::Candidate> fallback;
      const long before = static_cast<long>(active.size());
      for (PlayerId i = 0; i < n; ++i) {
        if (res.forced.count(i) || !is_active(cur.profile[i])) continue;
        for (Action d : {Action::Zero, Action::One}) {
          if (d == Action::One) {
            // Two adjacent players held at One would never resolve.
            bool blocked = false;
            for (PlayerId j : g.neighbors(i)) {
              auto it = res.forced.find(j);
              blocked = blocked || (it != res.forced.end() && it->second == Action::One);
            }
            if (blocked) continue;
          }
          Forcing trial = res.forced;
          trial[i] = d;
          Profile after = converge_held(g, c, all_undecided(n), trial, n).profile;
          long score = before - static_cast<long>(active_edges(g, after).size());
          if (opt.variant == Variant::CP2) score += static_cast<long>(detail::count_changes(cur.profile, after));
          cands.push_back({i, d, score});
          if (d == Action::Zero && on_active[i]) fallback.push_back({i, d, score});
        }
      }
      long top = cands.empty() ? 0 : cands.front().score;
      for (const auto& x : cands) top = std::max(top, x.score);
      if (cands.empty() || top <= 0) cands = fallback;
    } else if (opt.variant == Variant::MaxDegree) {
      for (PlayerId i = 0; i < n; ++i) {
        if (res.forced.count(i) || !is_active(cur.profile[i])) continue;
        long deg = 0;
        for (PlayerId j : g.neighbors(i)) deg += is_active(cur.profile[j]);
        cands.push_back({i, Action::Zero, deg});
      }
    } else {
      for (PlayerId i = 0; i < n; ++i)
        if (on_active[i] && !res.forced.count(i)) cands.push_back({i, Action::Zero, 0});
    }

    if (cands.empty()) throw std::logic_error("greedy found no eligible player");
    detail::Candidate choice = pick(cands);
    res.controlled.push_back(choice.player);
    res.forced[choice.player] = choice.action;
    cur = converge_held(g, c, all_undecided(n), res.forced, n);
    res.convergence_times.push_back(cur.time);
    stages.push_back(res.forced);
  }
  res.static_policy = StaticPolicy{res.forced};
  res.dynamic_policy = detail::staged_policy(stages, res.convergence_times, n);
  return res;
}

}  // namespace anticoord
