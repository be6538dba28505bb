#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace anticoord {

using PlayerId = std::size_t;
using Edge = std::pair<PlayerId, PlayerId>;

// Ternary action. Undecided plays like One in the ceiling sum and like Zero in the floor sum.
enum class Action : std::uint8_t { Zero = 0, One = 1, Undecided = 2 };

using Profile = std::vector<Action>;

inline int ceil_value(Action a) { return a == Action::Zero ? 0 : 1; }
inline int floor_value(Action a) { return a == Action::One ? 1 : 0; }
inline bool is_decided(Action a) { return a != Action::Undecided; }
inline bool is_active(Action a) { return a != Action::Zero; }

inline char action_char(Action a) {
  switch (a) {
    case Action::Zero: return '0';
    case Action::One: return '1';
    default: return 'e';
  }
}

inline std::string to_string(const Profile& a) {
  std::string s;
  s.reserve(a.size());
  for (Action x : a) s.push_back(action_char(x));
  return s;
}

inline Profile all_undecided(std::size_t n) { return Profile(n, Action::Undecided); }

// Payoff constants c0 (type 0) and c1 (type 1). Any positive value is accepted.
struct PayoffConstants {
  double c0 = 0.5;
  double c1 = 0.5;

  PayoffConstants() = default;
  PayoffConstants(double zero, double one) : c0(zero), c1(one) {
    if (!(c0 > 0.0) || !(c1 > 0.0)) {
      std::ostringstream os;
      os << "payoff constants must be positive, got c0=" << c0 << " c1=" << c1;
      throw std::invalid_argument(os.str());
    }
  }

  double for_type(int s) const { return s == 0 ? c0 : c1; }
};

// Undirected bipartite graph whose sides are the two player types.
class Graph {
 public:
  Graph() = default;

  Graph(std::vector<int> types, std::vector<Edge> edges) : types_(std::move(types)) {
    const std::size_t n = types_.size();
    for (std::size_t i = 0; i < n; ++i) {
      if (types_[i] != 0 && types_[i] != 1) {
        throw std::invalid_argument("player " + std::to_string(i) + " has type " +
                                    std::to_string(types_[i]) + ", expected 0 or 1");
      }
    }
    for (auto [u, v] : edges) {
      const std::string tag = "(" + std::to_string(u) + "," + std::to_string(v) + ")";
      if (u >= n || v >= n) throw std::invalid_argument("edge " + tag + " references a player outside [0," + std::to_string(n) + ")");
      if (u == v) throw std::invalid_argument("edge " + tag + " is a self-loop");
      if (types_[u] == types_[v]) throw std::invalid_argument("edge " + tag + " joins two players of type " + std::to_string(types_[u]));
      edges_.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(edges_.begin(), edges_.end());
    if (auto it = std::adjacent_find(edges_.begin(), edges_.end()); it != edges_.end()) {
      throw std::invalid_argument("duplicate edge (" + std::to_string(it->first) + "," + std::to_string(it->second) + ")");
    }
    offsets_.assign(n + 1, 0);
    for (auto [u, v] : edges_) {
      ++offsets_[u + 1];
      ++offsets_[v + 1];
    }
    for (std::size_t i = 0; i < n; ++i) offsets_[i + 1] += offsets_[i];
    adjacency_.resize(offsets_[n]);
    std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
    for (auto [u, v] : edges_) {
      adjacency_[fill[u]++] = v;
      adjacency_[fill[v]++] = u;
    }
    for (std::size_t i = 0; i < n; ++i) std::sort(adjacency_.begin() + offsets_[i], adjacency_.begin() + offsets_[i + 1]);
  }

  std::size_t size() const { return types_.size(); }
  int type(PlayerId i) const { return types_[i]; }
  const std::vector<int>& types() const { return types_; }
  const std::vector<Edge>& edges() const { return edges_; }

  std::span<const PlayerId> neighbors(PlayerId i) const {
    return {adjacency_.data() + offsets_[i], offsets_[i + 1] - offsets_[i]};
  }
  std::size_t degree(PlayerId i) const { return offsets_[i + 1] - offsets_[i]; }

  std::vector<PlayerId> players_of_type(int s) const {
    std::vector<PlayerId> out;
    for (std::size_t i = 0; i < size(); ++i)
      if (types_[i] == s) out.push_back(i);
    return out;
  }

  bool has_edge(PlayerId u, PlayerId v) const {
    auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.types_ == b.types_ && a.edges_ == b.edges_;
  }

 private:
  std::vector<int> types_;
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_{0};
  std::vector<PlayerId> adjacency_;
};

inline void check_profile(const Graph& g, const Profile& a) {
  if (a.size() != g.size()) {
    throw std::invalid_argument("profile has " + std::to_string(a.size()) + " entries, graph has " +
                                std::to_string(g.size()) + " players");
  }
}

inline double constant_of(const Graph& g, const PayoffConstants& c, PlayerId i) {
  return c.for_type(g.type(i));
}

inline int one_count(const Graph& g, const Profile& a, PlayerId i) {
  int s = 0;
  for (PlayerId j : g.neighbors(i)) s += floor_value(a[j]);
  return s;
}

// u_i = a_i (1 - c_i * sum_j a_j) for a decided profile.
inline double utility(const Graph& g, const PayoffConstants& c, const Profile& a, PlayerId i) {
  check_profile(g, a);
  for (PlayerId j : g.neighbors(i))
    if (!is_decided(a[j])) throw std::invalid_argument("utility needs decided neighbors");
  if (!is_decided(a[i])) throw std::invalid_argument("utility needs a decided action");
  return floor_value(a[i]) * (1.0 - constant_of(g, c, i) * one_count(g, a, i));
}

// Ties resolve to Zero.
inline Action best_response(const Graph& g, const PayoffConstants& c, const Profile& a, PlayerId i) {
  return 1.0 > constant_of(g, c, i) * one_count(g, a, i) ? Action::One : Action::Zero;
}

// Edges whose endpoints both play Undecided or One.
inline std::vector<Edge> active_edges(const Graph& g, const Profile& a) {
  check_profile(g, a);
  std::vector<Edge> out;
  for (const Edge& e : g.edges())
    if (is_active(a[e.first]) && is_active(a[e.second])) out.push_back(e);
  return out;
}

inline bool is_max_anticoordination(const Graph& g, const Profile& a) {
  check_profile(g, a);
  if (!std::all_of(a.begin(), a.end(), is_decided)) return false;
  return active_edges(g, a).empty();
}

inline bool is_nash(const Graph& g, const PayoffConstants& c, const Profile& a) {
  check_profile(g, a);
  if (!std::all_of(a.begin(), a.end(), is_decided)) return false;
  for (PlayerId i = 0; i < g.size(); ++i)
    if (best_response(g, c, a, i) != a[i]) return false;
  return true;
}

}  // namespace anticoord
