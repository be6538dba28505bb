#pragma once

#include <boost/rational.hpp>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "anticoord/learning.hpp"

namespace anticoord {

using Rational = boost::rational<std::int64_t>;

inline double to_double(const Rational& r) { return boost::rational_cast<double>(r); }

inline std::vector<PlayerId> controlled_set(const Forcing& x) {
  std::vector<PlayerId> out;
  out.reserve(x.size());
  for (const auto& kv : x) out.push_back(kv.first);
  return out;
}

// The same players held at the same actions at every step.
struct StaticPolicy {
  Forcing forced;

  std::vector<PlayerId> controlled() const { return controlled_set(forced); }
  friend bool operator==(const StaticPolicy&, const StaticPolicy&) = default;
};

// head[t] is used for t < head.size(), tail afterwards.
struct DynamicPolicy {
  std::vector<Forcing> head;
  Forcing tail;

  const Forcing& at(std::size_t t) const { return t < head.size() ? head[t] : tail; }
  friend bool operator==(const DynamicPolicy&, const DynamicPolicy&) = default;
};

// Drops trailing head entries that equal the tail.
inline DynamicPolicy normalized(DynamicPolicy p) {
  while (!p.head.empty() && p.head.back() == p.tail) p.head.pop_back();
  return p;
}

inline DynamicPolicy hold_forever(const StaticPolicy& p) { return DynamicPolicy{{}, p.forced}; }

// Forcing applied only at t = 0 and t = 1.
inline DynamicPolicy two_step(const Forcing& x) { return DynamicPolicy{{x, x}, {}}; }

// Nothing for the first `delay` steps, then x forever.
inline DynamicPolicy delayed_tail(const Forcing& x, std::size_t delay) {
  return DynamicPolicy{std::vector<Forcing>(delay), x};
}

inline void check_policy(const Graph& g, const DynamicPolicy& p) {
  for (const auto& x : p.head) check_forcing(g, x);
  check_forcing(g, p.tail);
}

// Records a^0 .. a^horizon where a^t = override(y^t, X^t) and y^{t+1} = step(a^t).
inline Trajectory controlled_run(const Graph& g, const PayoffConstants& c, const Profile& y0,
                                 const DynamicPolicy& policy, std::size_t horizon) {
  check_profile(g, y0);
  check_policy(g, policy);
  Trajectory tr;
  tr.profiles.push_back(apply_forcing(y0, policy.at(0)));
  for (std::size_t t = 1; t <= horizon; ++t) {
    tr.profiles.push_back(apply_forcing(step(g, c, tr.profiles.back()), policy.at(t)));
    const std::size_t k = t - 1;
    if (!tr.convergence_time && k >= policy.head.size() && tr.profiles[t] == tr.profiles[k]) tr.convergence_time = k;
  }
  return tr;
}

inline std::size_t cost_static(const StaticPolicy& p) { return p.forced.size(); }

// (1/n) * sum_{t<n} |X^t| + |tail|.
inline Rational cost_dynamic(const DynamicPolicy& p, std::size_t n) {
  if (n == 0) throw std::invalid_argument("cost_dynamic needs n > 0");
  std::int64_t transient = 0;
  for (std::size_t t = 0; t < n; ++t) transient += static_cast<std::int64_t>(p.at(t).size());
  return Rational(transient, static_cast<std::int64_t>(n)) + Rational(static_cast<std::int64_t>(p.tail.size()));
}

// Distinct players the policy ever touches.
inline std::size_t players_touched(const DynamicPolicy& p) {
  std::set<PlayerId> s;
  for (const auto& x : p.head)
    for (const auto& kv : x) s.insert(kv.first);
  for (const auto& kv : p.tail) s.insert(kv.first);
  return s.size();
}

struct Violation {
  std::size_t time = 0;
  std::optional<Edge> edge;        // an active edge at that time
  std::optional<PlayerId> player;  // or an undecided player

  std::string describe() const {
    std::string s = "t=" + std::to_string(time) + ": ";
    if (edge) return s + "active edge (" + std::to_string(edge->first) + "," + std::to_string(edge->second) + ")";
    return s + "player " + std::to_string(player.value_or(0)) + " undecided";
  }
};

struct CostReport {
  std::size_t static_cost = 0;
  Rational dynamic_cost{0};
  bool feasible = false;
  std::optional<Violation> witness;
};

inline std::optional<Violation> violation_at(const Graph& g, const Profile& a, std::size_t t) {
  for (const Edge& e : g.edges())
    if (is_active(a[e.first]) && is_active(a[e.second])) return Violation{t, e, std::nullopt};
  for (PlayerId i = 0; i < a.size(); ++i)
    if (!is_decided(a[i])) return Violation{t, std::nullopt, i};
  return std::nullopt;
}

namespace detail {

// Checks every a^t with t >= n, starting from all-Undecided. Once the policy is in
// its tail the state is the profile alone, so the scan stops at the first repeat.
inline std::optional<Violation> first_violation(const Graph& g, const PayoffConstants& c, const DynamicPolicy& p) {
  const std::size_t n = g.size();
  const std::size_t settle = std::max(n, p.head.size());
  Profile a = apply_forcing(all_undecided(n), p.at(0));
  std::set<Profile> seen;
  for (std::size_t t = 0;; ++t) {
    if (t >= n)
      if (auto v = violation_at(g, a, t)) return v;
    if (t >= settle && !seen.insert(a).second) return std::nullopt;
    a = apply_forcing(step(g, c, a), p.at(t + 1));
  }
}

}  // namespace detail

inline CostReport validate_dynamic(const Graph& g, const PayoffConstants& c, const DynamicPolicy& p) {
  check_policy(g, p);
  CostReport r;
  r.static_cost = players_touched(p);
  r.dynamic_cost = cost_dynamic(p, std::max<std::size_t>(g.size(), 1));
  r.witness = detail::first_violation(g, c, p);
  r.feasible = !r.witness;
  return r;
}

// dynamic_cost is that of the policy repeated forever, 2|X|.
inline CostReport validate_static(const Graph& g, const PayoffConstants& c, const StaticPolicy& p) {
  check_forcing(g, p.forced);
  CostReport r;
  r.static_cost = cost_static(p);
  r.dynamic_cost = cost_dynamic(hold_forever(p), std::max<std::size_t>(g.size(), 1));
  r.witness = detail::first_violation(g, c, hold_forever(p));
  r.feasible = !r.witness;
  return r;
}

// Decided profiles reached by the uncontrolled dynamics from all-Undecided within n steps.
inline bool dominance_solvable(const Graph& g, const PayoffConstants& c) {
  Convergence r = converge_held(g, c, all_undecided(g.size()), {}, g.size());
  return std::all_of(r.profile.begin(), r.profile.end(), is_decided);
}

// Exhaustive; only for small graphs.
inline std::optional<bool> exists_anticoordinating_nash(const Graph& g, const PayoffConstants& c) {
  const std::size_t n = g.size();
  if (n > 24) return std::nullopt;
  Profile a(n);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    for (std::size_t i = 0; i < n; ++i) a[i] = (mask >> i) & 1 ? Action::One : Action::Zero;
    if (is_max_anticoordination(g, a) && is_nash(g, c, a)) return true;
  }
  return false;
}

enum class DominanceBranch { EmptyPolicy, NonemptyTail, Neither };

struct LemmaReport {
  std::optional<bool> persistence;         // feasible static policy stays anti-coordinated on (n, 3n]
  bool dynamic_within_twice_static = false;
  std::optional<DominanceBranch> dominance_branch;  // set when the instance is dominance solvable
  std::optional<bool> settles_in_nash;     // set when an anti-coordinating Nash profile exists
};

inline LemmaReport check_lemma_properties(const Graph& g, const PayoffConstants& c, const StaticPolicy& best_static,
                                          const DynamicPolicy& best_dynamic) {
  const std::size_t n = g.size();
  LemmaReport r;
  if (validate_static(g, c, best_static).feasible) {
    Trajectory tr = controlled_run(g, c, all_undecided(n), hold_forever(best_static), 3 * n);
    bool ok = true;
    for (std::size_t t = n + 1; t <= 3 * n; ++t) ok = ok && is_max_anticoordination(g, tr.profiles[t]);
    r.persistence = ok;
  }
  r.dynamic_within_twice_static =
      cost_dynamic(best_dynamic, n) <= Rational(2 * static_cast<std::int64_t>(cost_static(best_static)));
  if (dominance_solvable(g, c)) {
    bool all_empty = best_dynamic.tail.empty();
    for (const auto& x : best_dynamic.head) all_empty = all_empty && x.empty();
    r.dominance_branch = all_empty                    ? DominanceBranch::EmptyPolicy
                         : !best_dynamic.tail.empty() ? DominanceBranch::NonemptyTail
                                                      : DominanceBranch::Neither;
  }
  if (exists_anticoordinating_nash(g, c).value_or(false)) {
    const std::size_t horizon = std::max(n, best_dynamic.head.size()) + (std::size_t{1} << std::min<std::size_t>(n, 16));
    Convergence tail_run = converge_held(
        g, c, controlled_run(g, c, all_undecided(n), best_dynamic, std::max(n, best_dynamic.head.size())).final_profile(),
        best_dynamic.tail, horizon);
    r.settles_in_nash = tail_run.converged && is_nash(g, c, tail_run.profile) &&
                        is_max_anticoordination(g, tail_run.profile);
  }
  return r;
}

}  // namespace anticoord
