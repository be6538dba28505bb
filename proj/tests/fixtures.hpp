#pragma once

#include <initializer_list>
#include <vector>

#include "anticoord/anticoord.hpp"

namespace fixtures {

using namespace anticoord;

// Converts 1-based labels to player ids.
inline PlayerId p(std::size_t label) { return label - 1; }

inline std::vector<PlayerId> ids(std::initializer_list<std::size_t> labels) {
  std::vector<PlayerId> out;
  for (auto l : labels) out.push_back(p(l));
  return out;
}

inline Forcing zeros(std::initializer_list<std::size_t> labels) {
  Forcing x;
  for (auto l : labels) x[p(l)] = Action::Zero;
  return x;
}

inline Profile prof(const char* s) {
  Profile a;
  for (; *s; ++s) a.push_back(*s == '1' ? Action::One : *s == '0' ? Action::Zero : Action::Undecided);
  return a;
}

// Eight players: 1-4 type 1, 5-8 type 0.
inline Graph fig3() {
  std::vector<Edge> e;
  for (auto [u, v] : std::initializer_list<std::pair<int, int>>{{1, 5}, {2, 5}, {3, 5}, {3, 6}, {4, 6}, {4, 7}, {4, 8}})
    e.emplace_back(p(u), p(v));
  return Graph({1, 1, 1, 1, 0, 0, 0, 0}, e);
}

inline PayoffConstants fig3_constants() { return {0.4, 0.4}; }

}  // namespace fixtures
