#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <optional>
#include <queue>
#include <tuple>
#include <vector>

#include "cactus/graph.hpp"

namespace cactus {

/// A biconnected component: a bridge or a 2-connected subgraph.
struct Block {
  std::vector<Vertex> vertices; // sorted
  std::vector<Edge> edges;      // sorted

  bool is_bridge() const { return edges.size() == 1; }
  // A 2-connected block with as many edges as vertices is a chordless cycle.
  bool is_cycle() const { return vertices.size() >= 3 && edges.size() == vertices.size(); }
  bool contains(Vertex x) const { return std::binary_search(vertices.begin(), vertices.end(), x); }

  friend bool operator==(const Block &, const Block &) = default;
};

/// Maximal path hanging off an anchor of degree >= 3. `path` runs from the
/// anchor's neighbour u1 out to the leaf; the anchor itself is not included,
/// so a pendant edge has length 1.
struct PendantPath {
  Vertex anchor = 0;
  std::vector<Vertex> path;

  std::size_t length() const { return path.size(); }

  friend bool operator==(const PendantPath &, const PendantPath &) = default;
};

struct CactusProfile {
  bool is_connected = false;
  bool is_cactus = false;
  std::size_t k = 0; // number of cycle blocks
  std::vector<Block> blocks;
  std::vector<Vertex> cut_vertices;
  std::vector<Edge> cut_edges;
  std::vector<PendantPath> pendant_paths;
  std::vector<Edge> proper_cut_edges;

  bool is_cut_vertex(Vertex x) const {
    return std::binary_search(cut_vertices.begin(), cut_vertices.end(), x);
  }
  bool is_cut_edge(Edge e) const {
    return std::binary_search(cut_edges.begin(), cut_edges.end(), e);
  }
  bool is_proper_cut_edge(Edge e) const {
    return std::binary_search(proper_cut_edges.begin(), proper_cut_edges.end(), e);
  }

  std::vector<const Block *> cycle_blocks() const {
    std::vector<const Block *> out;
    for (const Block &b : blocks)
      if (b.is_cycle())
        out.push_back(&b);
    return out;
  }
};

/// Block decomposition by the DFS lowpoint method. Blocks are returned in
/// lexicographic order of their vertex lists; isolated vertices have none.
inline std::vector<Block> blocks(const Graph &g) {
  const std::size_t n = g.order();
  std::vector<std::size_t> disc(n, unreachable);
  std::vector<std::size_t> low(n, 0);
  std::vector<Vertex> parent(n, unreachable);
  std::vector<Edge> stack;
  std::vector<Block> result;
  std::size_t timer = 0;

  auto emit = [&](Edge until) {
    Block b;
    while (true) {
      Edge e = stack.back();
      stack.pop_back();
      b.edges.push_back(e);
      b.vertices.push_back(e.u);
      b.vertices.push_back(e.v);
      if (e == until)
        break;
    }
    std::sort(b.edges.begin(), b.edges.end());
    std::sort(b.vertices.begin(), b.vertices.end());
    b.vertices.erase(std::unique(b.vertices.begin(), b.vertices.end()), b.vertices.end());
    result.push_back(std::move(b));
  };

  std::function<void(Vertex)> dfs = [&](Vertex u) {
    disc[u] = low[u] = timer++;
    for (Vertex w : g.neighbors(u)) {
      if (disc[w] == unreachable) {
        parent[w] = u;
        stack.emplace_back(u, w);
        dfs(w);
        low[u] = std::min(low[u], low[w]);
        if (low[w] >= disc[u])
          emit(Edge(u, w));
      } else if (w != parent[u] && disc[w] < disc[u]) {
        stack.emplace_back(u, w);
        low[u] = std::min(low[u], disc[w]);
      }
    }
  };

  for (Vertex s = 0; s < n; ++s)
    if (disc[s] == unreachable)
      dfs(s);

  std::sort(result.begin(), result.end(),
            [](const Block &a, const Block &b) { return a.vertices < b.vertices; });
  return result;
}

/// Vertices of a cycle block in cyclic order, starting at its smallest vertex
/// and continuing towards the smaller of that vertex's two block neighbours.
inline std::vector<Vertex> cycle_order(const Block &b) {
  if (!b.is_cycle())
    throw PreconditionError("block is not a cycle");
  auto block_nbrs = [&](Vertex x) {
    std::vector<Vertex> out;
    for (const Edge &e : b.edges)
      if (e.touches(x))
        out.push_back(e.other(x));
    std::sort(out.begin(), out.end());
    return out;
  };
  std::vector<Vertex> order{b.vertices.front()};
  Vertex prev = b.vertices.front();
  Vertex cur = block_nbrs(prev).front();
  while (cur != order.front()) {
    order.push_back(cur);
    auto nb = block_nbrs(cur);
    Vertex next = nb[0] == prev ? nb[1] : nb[0];
    prev = cur;
    cur = next;
  }
  return order;
}

namespace detail {

// Number of vertices reachable from `start` when edge `skip` is deleted.
inline std::size_t reach_without(const Graph &g, Vertex start, Edge skip) {
  std::vector<bool> seen(g.order(), false);
  std::queue<Vertex> frontier;
  seen[start] = true;
  frontier.push(start);
  std::size_t count = 1;
  while (!frontier.empty()) {
    Vertex x = frontier.front();
    frontier.pop();
    for (Vertex y : g.neighbors(x)) {
      if (seen[y] || Edge(x, y) == skip)
        continue;
      seen[y] = true;
      ++count;
      frontier.push(y);
    }
  }
  return count;
}

} // namespace detail

inline std::vector<PendantPath> pendant_paths(const Graph &g) {
  std::vector<PendantPath> result;
  for (Vertex leaf = 0; leaf < g.order(); ++leaf) {
    if (g.degree(leaf) != 1)
      continue;
    std::vector<Vertex> walk{leaf};
    Vertex prev = leaf;
    Vertex cur = g.neighbors(leaf).front();
    while (g.degree(cur) == 2) {
      walk.push_back(cur);
      auto nb = g.neighbors(cur);
      Vertex next = nb[0] == prev ? nb[1] : nb[0];
      prev = cur;
      cur = next;
    }
    if (g.degree(cur) < 3)
      continue; // the whole component is a path
    std::reverse(walk.begin(), walk.end());
    result.push_back({cur, std::move(walk)});
  }
  std::sort(result.begin(), result.end(), [](const PendantPath &a, const PendantPath &b) {
    return std::tie(a.anchor, a.path) < std::tie(b.anchor, b.path);
  });
  return result;
}

inline CactusProfile cactus_profile(const Graph &g) {
  CactusProfile p;
  p.is_connected = is_connected(g);
  p.blocks = blocks(g);

  std::vector<std::size_t> block_count(g.order(), 0);
  bool all_edge_or_cycle = true;
  for (const Block &b : p.blocks) {
    for (Vertex x : b.vertices)
      ++block_count[x];
    if (b.is_cycle())
      ++p.k;
    else if (!b.is_bridge())
      all_edge_or_cycle = false;
    if (b.is_bridge())
      p.cut_edges.push_back(b.edges.front());
  }
  std::sort(p.cut_edges.begin(), p.cut_edges.end());
  for (Vertex x = 0; x < g.order(); ++x)
    if (block_count[x] >= 2)
      p.cut_vertices.push_back(x);

  p.is_cactus = p.is_connected && all_edge_or_cycle;
  p.pendant_paths = pendant_paths(g);

  for (const Edge &e : p.cut_edges) {
    const std::size_t side_u = detail::reach_without(g, e.u, e);
    const std::size_t side_v = detail::reach_without(g, e.v, e);
    if (side_u >= 2 && side_v >= 2)
      p.proper_cut_edges.push_back(e);
  }
  return p;
}

} // namespace cactus
