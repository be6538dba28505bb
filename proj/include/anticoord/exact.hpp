#pragma once

#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "anticoord/policy.hpp"

namespace anticoord {

enum class Survivors { Zero, One, Both };

// Iterated elimination of strictly dominated strategies, written directly from the
// payoff: One is dominated when c_i * (least possible One-neighbors) > 1, Zero when
// c_i * (most possible One-neighbors) < 1. Players are revisited in index order
// until nothing changes.
inline std::vector<Survivors> iterated_elimination(const Graph& g, const PayoffConstants& c) {
  const std::size_t n = g.size();
  std::vector<int> lo(n, 0), hi(n, 1);
  for (bool changed = true; changed;) {
    changed = false;
    for (PlayerId i = 0; i < n; ++i) {
      if (lo[i] == hi[i]) continue;
      int least = 0, most = 0;
      for (PlayerId j : g.neighbors(i)) {
        least += lo[j];
        most += hi[j];
      }
      const double ci = c.for_type(g.type(i));
      if (ci * least > 1.0) {
        hi[i] = 0;
        changed = true;
      } else if (ci * most < 1.0) {
        lo[i] = 1;
        changed = true;
      }
    }
  }
  std::vector<Survivors> out(n);
  for (PlayerId i = 0; i < n; ++i) out[i] = lo[i] == hi[i] ? (lo[i] ? Survivors::One : Survivors::Zero) : Survivors::Both;
  return out;
}

inline bool is_dominance_solvable(const std::vector<Survivors>& s) {
  for (Survivors x : s)
    if (x == Survivors::Both) return false;
  return true;
}

namespace detail {

// Walks subsets of [0, n) by size, then lexicographically, then assignments with
// Zero before One (the first player varies slowest). Stops when fn returns true.
template <class Fn>
void for_each_forcing(std::size_t n, std::size_t max_size, bool zero_only, Fn&& fn) {
  for (std::size_t k = 0; k <= std::min(n, max_size); ++k) {
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    while (true) {
      const std::uint64_t masks = zero_only ? 1 : (std::uint64_t{1} << k);
      for (std::uint64_t m = 0; m < masks; ++m) {
        Forcing x;
        for (std::size_t i = 0; i < k; ++i) x[idx[i]] = (m >> (k - 1 - i)) & 1 ? Action::One : Action::Zero;
        if (fn(k, x)) return;
      }
      std::size_t i = k;
      while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
}

// All a^t with t >= 0 anti-coordinated when x is held from profile y on.
inline bool held_feasible_from(const Graph& g, const PayoffConstants& c, const Profile& y, const Forcing& x) {
  Profile a = apply_forcing(y, x);
  std::set<Profile> seen;
  while (true) {
    if (!is_max_anticoordination(g, a)) return false;
    if (!seen.insert(a).second) return true;
    a = apply_forcing(step(g, c, a), x);
  }
}

}  // namespace detail

struct StaticSolution {
  StaticPolicy policy;
  std::size_t cost = 0;
};

// Cheapest feasible static policy by exhaustive search. The first one found in
// size / lexicographic / Zero-first order is returned.
inline StaticSolution brute_static(const Graph& g, const PayoffConstants& c, std::size_t max_n = 14) {
  const std::size_t n = g.size();
  if (n > max_n) throw std::length_error("brute_static is limited to " + std::to_string(max_n) + " players, got " + std::to_string(n));
  std::optional<StaticSolution> best;
  detail::for_each_forcing(n, n, false, [&](std::size_t k, const Forcing& x) {
    // From all-Undecided with a held forcing, decisions never reverse, so the run
    // settles within n steps.
    Convergence r = converge_held(g, c, all_undecided(n), x, n);
    bool ok = r.converged ? is_max_anticoordination(g, r.profile) : validate_static(g, c, StaticPolicy{x}).feasible;
    if (ok) best = StaticSolution{StaticPolicy{x}, k};
    return ok;
  });
  if (!best) throw std::logic_error("no feasible static policy; forcing everyone to Zero should always work");
  return *best;
}

struct RestrictedDynamicSolution {
  DynamicPolicy policy;
  Rational cost{0};
  Forcing head;  // held at t = 0 and t = 1
  Forcing tail;  // held at Zero from t = n on
};

inline DynamicPolicy two_phase_policy(const Forcing& head, const Forcing& tail, std::size_t n) {
  DynamicPolicy p{std::vector<Forcing>(std::max<std::size_t>(n, 2)), tail};
  p.head[0] = head;
  p.head[1] = head;
  return normalized(p);
}

// Cheapest policy of the two-phase form: a forcing H at t = 0 and 1, nothing
// until n, then a Zero-forcing T held forever. Cost 2|H|/n + |T|.
inline RestrictedDynamicSolution brute_dynamic_restricted(const Graph& g, const PayoffConstants& c,
                                                          std::size_t max_n = 10) {
  const std::size_t n = g.size();
  if (n > max_n) throw std::length_error("brute_dynamic_restricted is limited to " + std::to_string(max_n) + " players, got " + std::to_string(n));
  if (n < 2) throw std::invalid_argument("brute_dynamic_restricted needs at least two players");
  const auto nn = static_cast<std::int64_t>(n);
  std::map<Profile, std::optional<Forcing>> tails;  // cheapest T per y^n, found so far
  std::optional<RestrictedDynamicSolution> best;
  detail::for_each_forcing(n, n, false, [&](std::size_t k, const Forcing& h) {
    const Rational head_cost(2 * static_cast<std::int64_t>(k), nn);
    if (best && head_cost >= best->cost) return true;
    Profile y = apply_forcing(all_undecided(n), h);
    y = apply_forcing(step(g, c, y), h);
    for (std::size_t t = 2; t <= n; ++t) y = step(g, c, y);
    auto it = tails.find(y);
    if (it == tails.end()) {
      std::optional<Forcing> found;
      detail::for_each_forcing(n, n, true, [&](std::size_t, const Forcing& t) {
        if (detail::held_feasible_from(g, c, y, t)) found = t;
        return found.has_value();
      });
      it = tails.emplace(y, found).first;
    }
    if (!it->second) return false;
    const Rational cost = head_cost + Rational(static_cast<std::int64_t>(it->second->size()));
    if (!best || cost < best->cost) best = RestrictedDynamicSolution{{}, cost, h, *it->second};
    return false;
  });
  best->policy = two_phase_policy(best->head, best->tail, n);
  return *best;
}

}  // namespace anticoord
