#pragma once

#include <algorithm>
#include <vector>

#include "anticoord/matching.hpp"
#include "anticoord/policy.hpp"

namespace anticoord {

// Players still playing Undecided or One after the uncontrolled run, with the
// edges among them.
struct ResidualGraph {
  Profile base;
  std::vector<int> types;
  std::vector<PlayerId> nodes;
  std::vector<Edge> edges;
};

inline ResidualGraph make_residual(const Graph& g, const Profile& a) {
  check_profile(g, a);
  ResidualGraph r{a, g.types(), {}, active_edges(g, a)};
  for (PlayerId i = 0; i < g.size(); ++i)
    if (is_active(a[i])) r.nodes.push_back(i);
  return r;
}

inline ResidualGraph build_residual(const Graph& g, const PayoffConstants& c) {
  return make_residual(g, converge_held(g, c, all_undecided(g.size()), {}, g.size()).profile);
}

namespace detail {

inline std::vector<PlayerId> koenig_with_left_type(const ResidualGraph& r, int left_type) {
  std::vector<PlayerId> left_ids, right_ids;
  std::vector<std::size_t> index(r.types.size(), 0);
  for (const Edge& e : r.edges)
    for (PlayerId p : {e.first, e.second}) {
      auto& side = r.types[p] == left_type ? left_ids : right_ids;
      if (std::find(side.begin(), side.end(), p) == side.end()) side.push_back(p);
    }
  std::sort(left_ids.begin(), left_ids.end());
  std::sort(right_ids.begin(), right_ids.end());
  for (std::size_t k = 0; k < left_ids.size(); ++k) index[left_ids[k]] = k;
  for (std::size_t k = 0; k < right_ids.size(); ++k) index[right_ids[k]] = k;
  std::vector<std::vector<std::size_t>> adj(left_ids.size());
  for (const Edge& e : r.edges) {
    PlayerId l = r.types[e.first] == left_type ? e.first : e.second;
    PlayerId rr = l == e.first ? e.second : e.first;
    adj[index[l]].push_back(index[rr]);
  }
  for (auto& a : adj) std::sort(a.begin(), a.end());
  Matching m = hopcroft_karp(left_ids.size(), right_ids.size(), adj);
  std::vector<std::size_t> cl, cr;
  koenig_cover(left_ids.size(), right_ids.size(), adj, m, cl, cr);
  std::vector<PlayerId> cover;
  for (std::size_t k : cl) cover.push_back(left_ids[k]);
  for (std::size_t k : cr) cover.push_back(right_ids[k]);
  std::sort(cover.begin(), cover.end());
  return cover;
}

}  // namespace detail

// Minimum vertex cover of the residual edges. Both orientations of the Koenig
// construction are tried and the lexicographically smaller cover is kept.
inline std::vector<PlayerId> min_vertex_cover(const ResidualGraph& r) {
  auto a = detail::koenig_with_left_type(r, 0);
  auto b = detail::koenig_with_left_type(r, 1);
  return std::min(a, b);
}

// Zero-playing players that would switch to One once the cover is pushed to Zero.
inline std::vector<PlayerId> compute_rho_positive(const Graph& g, const PayoffConstants& c, const ResidualGraph& r,
                                                  const std::vector<PlayerId>& cover) {
  std::vector<char> in_cover(g.size(), 0);
  for (PlayerId p : cover) in_cover[p] = 1;
  std::vector<PlayerId> out;
  for (PlayerId k = 0; k < g.size(); ++k) {
    if (is_active(r.base[k])) continue;
    int s = 0;
    for (PlayerId j : g.neighbors(k)) s += ceil_value(r.base[j]) - in_cover[j];
    if (constant_of(g, c, k) * s < 1.0) out.push_back(k);
  }
  return out;
}

// Empty before n. At n the cover goes to Zero and uncovered Undecided residual
// players to One. From n+1 the cover and rho are held at Zero, unless the profile
// at n is already a Nash equilibrium.
inline DynamicPolicy assemble_pi_v(const Graph& g, const PayoffConstants& c, const ResidualGraph& r,
                                   const std::vector<PlayerId>& cover, const std::vector<PlayerId>& rho) {
  const std::size_t n = g.size();
  Forcing at_n, tail;
  for (PlayerId p : cover) at_n[p] = Action::Zero;
  for (PlayerId p : r.nodes)
    if (r.base[p] == Action::Undecided && !at_n.count(p)) at_n[p] = Action::One;
  DynamicPolicy p{std::vector<Forcing>(n), {}};
  p.head.push_back(at_n);
  Profile a_n = controlled_run(g, c, all_undecided(n), p, n).final_profile();
  if (!is_nash(g, c, a_n)) {
    for (PlayerId q : cover) tail[q] = Action::Zero;
    for (PlayerId q : rho) tail[q] = Action::Zero;
    p.tail = tail;
  }
  return normalized(p);
}

struct VertexCoverSolution {
  ResidualGraph residual;
  std::vector<PlayerId> cover;
  std::vector<PlayerId> rho_positive;
  DynamicPolicy policy;
};

inline VertexCoverSolution solve_vertex_cover(const Graph& g, const PayoffConstants& c) {
  VertexCoverSolution s;
  s.residual = build_residual(g, c);
  s.cover = min_vertex_cover(s.residual);
  s.rho_positive = compute_rho_positive(g, c, s.residual, s.cover);
  s.policy = assemble_pi_v(g, c, s.residual, s.cover, s.rho_positive);
  return s;
}

}  // namespace anticoord
