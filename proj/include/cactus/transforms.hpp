#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cactus/alpha_spectral.hpp"
#include "cactus/extremal.hpp"
#include "cactus/graph.hpp"
#include "cactus/profile.hpp"

namespace cactus {

enum class RewriteKind { rotate, shrink_cycle, contract_pendant_path, merge_cut_edge, merge_cut_vertices };

inline std::string_view to_string(RewriteKind k) {
  switch (k) {
  case RewriteKind::rotate:
    return "rotate";
  case RewriteKind::shrink_cycle:
    return "shrink_cycle";
  case RewriteKind::contract_pendant_path:
    return "contract_pendant_path";
  case RewriteKind::merge_cut_edge:
    return "merge_cut_edge";
  case RewriteKind::merge_cut_vertices:
    return "merge_cut_vertices";
  }
  return "unknown";
}

/// Perron entries backing a rotation: edges move from `v` to `w`, which is
/// allowed because x_w >= x_v.
struct Witness {
  Vertex v = 0;
  Vertex w = 0;
  double x_v = 0.0;
  double x_w = 0.0;
};

struct RewriteStep {
  RewriteKind kind = RewriteKind::rotate;
  std::vector<Edge> removed;
  std::vector<Edge> added;
  double rho_before = 0.0;
  double rho_after = 0.0;
  Witness witness;
};

struct RewriteResult {
  Graph graph;
  RewriteStep step;
};

/// Required gap rho(after) - rho(before) for a rewrite to count as strict.
inline constexpr double strict_increase_margin = 1e-7;
/// Above this alpha the guaranteed gap can be smaller than the margin, so
/// only non-decrease (within 1e-9) is asserted.
inline constexpr double strict_alpha_limit = 0.95;
/// Perron entries closer than this are treated as tied.
inline constexpr double perron_tie_tolerance = 1e-12;
/// rho must exceed 2 by this much before pendant-path monotonicity is used.
inline constexpr double radius_two_margin = 1e-9;

namespace detail {

inline CactusProfile require_connected_cactus(const Graph &g, std::string_view op) {
  CactusProfile p = cactus_profile(g);
  if (!p.is_cactus)
    throw PreconditionError(std::string(op) + " requires a connected cactus");
  return p;
}

// Returns (hi, lo) with x[hi] >= x[lo]; ties go to the lower label as hi.
inline std::pair<Vertex, Vertex> order_by_perron(std::span<const double> x, Vertex a, Vertex b) {
  if (std::abs(x[a] - x[b]) <= perron_tie_tolerance)
    return a < b ? std::pair{a, b} : std::pair{b, a};
  return x[a] > x[b] ? std::pair{a, b} : std::pair{b, a};
}

inline void check_increase(RewriteKind kind, double before, double after, Alpha alpha) {
  const bool ok = alpha.value() <= strict_alpha_limit ? after - before > strict_increase_margin
                                                      : after >= before - 1e-9;
  if (!ok)
    throw LemmaViolation(std::string(to_string(kind)) + " did not increase the spectral radius (" +
                             std::to_string(before) + " -> " + std::to_string(after) + ")",
                         before, after);
}

// Applies the edge move, checks the result is still a cactus with the same
// cycle count, and asserts the strict radius increase.
inline RewriteResult finish(const Graph &g, std::size_t k, const PerronPair &before,
                            RewriteKind kind, std::vector<Edge> removed, std::vector<Edge> added,
                            Witness witness, Alpha alpha) {
  Graph h = apply_edge_rewrite(g, removed, added);
  const CactusProfile hp = cactus_profile(h);
  if (!hp.is_connected)
    throw GraphError(std::string(to_string(kind)) + " produced a disconnected graph");
  if (!hp.is_cactus || hp.k != k)
    throw GraphError(std::string(to_string(kind)) + " did not produce a cactus with " +
                     std::to_string(k) + " cycles");
  const double after = spectral_radius(h, alpha).rho;
  check_increase(kind, before.rho, after, alpha);
  RewriteStep step{kind, std::move(removed), std::move(added), before.rho, after, witness};
  return {std::move(h), std::move(step)};
}

} // namespace detail

/// Moves the edges {s v : s in S} to {s w : s in S}.
///
/// Requires S nonempty, S inside N(v) \ (N(w) + w), and x_w >= x_v for the
/// Perron vector of g; then rho strictly increases.
inline RewriteResult rotate_edges(const Graph &g, Vertex v, Vertex w, std::span<const Vertex> S,
                                  Alpha alpha) {
  require_alpha_below_one(alpha, "rotate_edges");
  const CactusProfile p = detail::require_connected_cactus(g, "rotate_edges");
  if (v >= g.order() || w >= g.order() || v == w)
    throw PreconditionError("rotate_edges needs two distinct vertices of the graph");
  if (S.empty())
    throw PreconditionError("rotate_edges needs a nonempty rotation set");
  std::set<Vertex> distinct(S.begin(), S.end());
  if (distinct.size() != S.size())
    throw PreconditionError("rotation set has repeated vertices");
  for (Vertex s : S) {
    if (s == w || !g.has_edge(s, v) || g.has_edge(s, w))
      throw PreconditionError("rotation set must lie in N(v) \\ (N(w) + w); vertex " +
                              std::to_string(s) + " does not");
  }
  const PerronPair before = spectral_radius(g, alpha);
  const double xv = before.vector[v];
  const double xw = before.vector[w];
  if (xw < xv - perron_tie_tolerance)
    throw PreconditionError("rotate_edges requires x_w >= x_v");

  std::vector<Edge> removed;
  std::vector<Edge> added;
  for (Vertex s : S) {
    removed.emplace_back(s, v);
    added.emplace_back(s, w);
  }
  return detail::finish(g, p.k, before, RewriteKind::rotate, std::move(removed), std::move(added),
                        {v, w, xv, xw}, alpha);
}

/// Shortens a cycle block of length >= 4 by one.
///
/// u is the cycle vertex with the largest Perron entry, v its cycle neighbour
/// with the smaller entry and w the other cycle neighbour of v; the edge vw
/// becomes uw.
inline RewriteResult shrink_cycle(const Graph &g, std::span<const Vertex> cycle, Alpha alpha) {
  require_alpha_below_one(alpha, "shrink_cycle");
  const CactusProfile p = detail::require_connected_cactus(g, "shrink_cycle");

  std::vector<Vertex> sorted(cycle.begin(), cycle.end());
  std::sort(sorted.begin(), sorted.end());
  const auto block = std::find_if(p.blocks.begin(), p.blocks.end(), [&](const Block &b) {
    return b.is_cycle() && b.vertices == sorted;
  });
  bool closed = cycle.size() >= 3 && block != p.blocks.end();
  for (std::size_t i = 0; closed && i < cycle.size(); ++i)
    closed = g.has_edge(cycle[i], cycle[(i + 1) % cycle.size()]);
  if (!closed)
    throw PreconditionError("vertex sequence is not a cycle block of the graph");
  if (cycle.size() == 3)
    throw PreconditionError("cycle is already a triangle");

  const PerronPair before = spectral_radius(g, alpha);
  const auto &x = before.vector;
  const std::size_t len = cycle.size();
  std::size_t iu = 0;
  for (std::size_t i = 1; i < len; ++i) {
    const double d = x[cycle[i]] - x[cycle[iu]];
    if (d > perron_tie_tolerance || (std::abs(d) <= perron_tie_tolerance && cycle[i] < cycle[iu]))
      iu = i;
  }
  const Vertex u = cycle[iu];
  const Vertex left = cycle[(iu + len - 1) % len];
  const Vertex right = cycle[(iu + 1) % len];
  const Vertex v = detail::order_by_perron(x, left, right).second;
  const Vertex w = v == left ? cycle[(iu + len - 2) % len] : cycle[(iu + 2) % len];

  return detail::finish(g, p.k, before, RewriteKind::shrink_cycle, {Edge(v, w)}, {Edge(u, w)},
                        {v, u, x[v], x[u]}, alpha);
}

/// Shortens a pendant path u1..ul (l >= 2) hanging from anchor u0 by moving
/// u1u2 to u0u2. Needs rho > 2 so that x0 > x1 along the path.
inline RewriteResult contract_pendant_path(const Graph &g, std::span<const Vertex> path,
                                           Alpha alpha) {
  require_alpha_below_one(alpha, "contract_pendant_path");
  const CactusProfile p = detail::require_connected_cactus(g, "contract_pendant_path");
  if (path.empty() || std::any_of(path.begin(), path.end(), [&](Vertex x) { return x >= g.order(); }))
    throw PreconditionError("pendant path has vertices outside the graph");
  if (path.size() < 2)
    throw PreconditionError("pendant path has length 1; nothing to contract");
  for (std::size_t i = 0; i + 1 < path.size(); ++i)
    if (!g.has_edge(path[i], path[i + 1]) || g.degree(path[i]) != 2)
      throw PreconditionError("vertex sequence is not a pendant path");
  if (g.degree(path.back()) != 1)
    throw PreconditionError("pendant path must end at a vertex of degree 1");
  const auto nb = g.neighbors(path[0]);
  const Vertex anchor = nb[0] == path[1] ? nb[1] : nb[0];
  if (g.degree(anchor) < 3)
    throw PreconditionError("pendant path has no anchor of degree >= 3");

  const PerronPair before = spectral_radius(g, alpha);
  if (before.rho <= 2.0 + radius_two_margin)
    throw PreconditionError("contract_pendant_path requires rho > 2");
  const auto &x = before.vector;
  return detail::finish(g, p.k, before, RewriteKind::contract_pendant_path,
                        {Edge(path[0], path[1])}, {Edge(anchor, path[1])},
                        {path[0], anchor, x[path[0]], x[anchor]}, alpha);
}

/// Collapses a proper cut edge uv (x_u >= x_v): every other edge at v moves to u.
inline RewriteResult merge_cut_edge(const Graph &g, Edge e, Alpha alpha) {
  require_alpha_below_one(alpha, "merge_cut_edge");
  const CactusProfile p = detail::require_connected_cactus(g, "merge_cut_edge");
  if (!p.is_proper_cut_edge(e))
    throw PreconditionError("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                            ") is not a proper cut edge");
  const PerronPair before = spectral_radius(g, alpha);
  const auto &x = before.vector;
  const auto [u, v] = detail::order_by_perron(x, e.u, e.v);
  std::vector<Edge> removed;
  std::vector<Edge> added;
  for (Vertex s : g.neighbors(v)) {
    if (s == u)
      continue;
    removed.emplace_back(v, s);
    added.emplace_back(u, s);
  }
  return detail::finish(g, p.k, before, RewriteKind::merge_cut_edge, std::move(removed),
                        std::move(added), {v, u, x[v], x[u]}, alpha);
}

/// Merges cut vertex v into cut vertex u (x_u >= x_v).
///
/// v keeps only its block nearest to u; every other block at v is re-hung at
/// u. The two vertices must not be joined by a cut edge (use merge_cut_edge).
inline RewriteResult merge_cut_vertices(const Graph &g, Vertex a, Vertex b, Alpha alpha) {
  require_alpha_below_one(alpha, "merge_cut_vertices");
  const CactusProfile p = detail::require_connected_cactus(g, "merge_cut_vertices");
  if (p.cut_vertices.size() < 2)
    throw PreconditionError("graph has fewer than two cut vertices");
  if (a == b || !p.is_cut_vertex(a) || !p.is_cut_vertex(b))
    throw PreconditionError("merge_cut_vertices needs two distinct cut vertices");
  if (p.is_cut_edge(Edge(a, b)))
    throw PreconditionError("cut vertices are joined by a cut edge; apply merge_cut_edge first");

  const PerronPair before = spectral_radius(g, alpha);
  const auto &x = before.vector;
  const auto [u, v] = detail::order_by_perron(x, a, b);

  const auto dist = distances_from(g, u);
  const Block *kept = nullptr;
  std::size_t kept_dist = unreachable;
  for (const Block &blk : p.blocks) {
    if (!blk.contains(v))
      continue;
    std::size_t d = unreachable;
    for (Vertex y : blk.vertices)
      d = std::min(d, dist[y]);
    if (kept == nullptr || d < kept_dist ||
        (d == kept_dist && blk.vertices.front() < kept->vertices.front())) {
      kept = &blk;
      kept_dist = d;
    }
  }

  std::vector<Edge> removed;
  std::vector<Edge> added;
  for (Vertex s : g.neighbors(v)) {
    if (kept->contains(s))
      continue;
    removed.emplace_back(v, s);
    added.emplace_back(u, s);
  }
  return detail::finish(g, p.k, before, RewriteKind::merge_cut_vertices, std::move(removed),
                        std::move(added), {v, u, x[v], x[u]}, alpha);
}

struct AscentResult {
  Graph graph;
  std::vector<RewriteStep> steps;
};

/// The first applicable rewrite in priority order (shrink_cycle,
/// contract_pendant_path, merge_cut_edge, merge_cut_vertices), or nothing at
/// a fixed point.
inline std::optional<RewriteResult> next_rewrite(const Graph &g, Alpha alpha) {
  const CactusProfile p = detail::require_connected_cactus(g, "greedy_ascent");
  for (const Block *b : p.cycle_blocks())
    if (b->vertices.size() >= 4)
      return shrink_cycle(g, cycle_order(*b), alpha);

  const bool long_path = std::any_of(p.pendant_paths.begin(), p.pendant_paths.end(),
                                     [](const PendantPath &pp) { return pp.length() >= 2; });
  if (long_path && spectral_radius(g, alpha).rho > 2.0 + radius_two_margin) {
    for (const PendantPath &pp : p.pendant_paths)
      if (pp.length() >= 2)
        return contract_pendant_path(g, pp.path, alpha);
  }

  if (!p.proper_cut_edges.empty())
    return merge_cut_edge(g, p.proper_cut_edges.front(), alpha);

  for (std::size_t i = 0; i < p.cut_vertices.size(); ++i)
    for (std::size_t j = i + 1; j < p.cut_vertices.size(); ++j)
      if (!p.is_cut_edge(Edge(p.cut_vertices[i], p.cut_vertices[j])))
        return merge_cut_vertices(g, p.cut_vertices[i], p.cut_vertices[j], alpha);
  return std::nullopt;
}

/// Applies next_rewrite until none applies. The fixed point is always
/// isomorphic to C^c(n, k); the trace records every step.
inline AscentResult greedy_ascent(const Graph &g, Alpha alpha) {
  require_alpha_below_one(alpha, "greedy_ascent");
  detail::require_connected_cactus(g, "greedy_ascent");
  const std::size_t budget = std::max(g.order() * g.size(), g.order() + g.size());
  AscentResult result{g, {}};
  while (auto next = next_rewrite(result.graph, alpha)) {
    if (result.steps.size() == budget)
      throw Error("greedy_ascent exceeded its step budget of " + std::to_string(budget));
    result.graph = std::move(next->graph);
    result.steps.push_back(std::move(next->step));
  }
  if (!has_cc_shape(result.graph))
    throw Error("greedy_ascent stopped at a graph that is not C^c(n,k)");
  return result;
}

} // namespace cactus
