#pragma once

#include <map>
#include <optional>
#include <vector>

#include "anticoord/game.hpp"

namespace anticoord {

// Players held at a fixed action for one time step.
using Forcing = std::map<PlayerId, Action>;

inline void check_forcing(const Graph& g, const Forcing& x) {
  for (auto [i, d] : x) {
    if (i >= g.size()) throw std::invalid_argument("forced player " + std::to_string(i) + " is not in the graph");
    if (!is_decided(d)) throw std::invalid_argument("player " + std::to_string(i) + " is forced to Undecided");
  }
}

inline Profile apply_forcing(Profile a, const Forcing& x) {
  for (auto [i, d] : x) a[i] = d;
  return a;
}

// One synchronous round. A player goes to One when even the worst case keeps it
// profitable, to Zero when even the best case does not, and otherwise keeps its value.
inline void step_into(const Graph& g, const PayoffConstants& c, const Profile& a, Profile& next) {
  next.resize(a.size());
  for (PlayerId i = 0; i < g.size(); ++i) {
    int hi = 0, lo = 0;
    for (PlayerId j : g.neighbors(i)) {
      hi += ceil_value(a[j]);
      lo += floor_value(a[j]);
    }
    const double ci = constant_of(g, c, i);
    if (1.0 > ci * hi)
      next[i] = Action::One;
    else if (1.0 < ci * lo)
      next[i] = Action::Zero;
    else
      next[i] = a[i];
  }
}

inline Profile step(const Graph& g, const PayoffConstants& c, const Profile& a) {
  check_profile(g, a);
  Profile next;
  step_into(g, c, a, next);
  return next;
}

struct Trajectory {
  std::vector<Profile> profiles;
  // Smallest k with a^{k+1} = a^k, if seen.
  std::optional<std::size_t> convergence_time;

  const Profile& final_profile() const { return profiles.back(); }
};

inline Trajectory run(const Graph& g, const PayoffConstants& c, const Profile& start, std::size_t horizon) {
  check_profile(g, start);
  Trajectory t;
  t.profiles.push_back(start);
  for (std::size_t k = 0;; ++k) {
    Profile next = step(g, c, t.profiles.back());
    if (next == t.profiles.back()) {
      t.convergence_time = k;
      break;
    }
    if (k == horizon) break;
    t.profiles.push_back(std::move(next));
  }
  return t;
}

// Result of iterating with a constant forcing until nothing changes.
struct Convergence {
  Profile profile;
  std::size_t time = 0;  // first k with a^{k+1} = a^k, capped at max_steps
  bool converged = false;
};

// a^0 = override(start), a^{t+1} = override(step(a^t)). Stops early at a fixed point,
// so the returned profile is a^{max_steps} either way.
inline Convergence converge_held(const Graph& g, const PayoffConstants& c, const Profile& start,
                                 const Forcing& held, std::size_t max_steps) {
  check_profile(g, start);
  Convergence r{apply_forcing(start, held), 0, false};
  Profile next;
  for (std::size_t k = 0;; ++k) {
    step_into(g, c, r.profile, next);
    for (auto [i, d] : held) next[i] = d;
    if (next == r.profile) {
      r.converged = true;
      return r;
    }
    if (k == max_steps) return r;
    r.profile.swap(next);
    r.time = k + 1;
  }
}

}  // namespace anticoord
