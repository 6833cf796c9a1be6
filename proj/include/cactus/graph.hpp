#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <limits>
#include <queue>
#include <set>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "cactus/error.hpp"

namespace cactus {

using Vertex = std::size_t;

inline constexpr std::size_t unreachable = std::numeric_limits<std::size_t>::max();

/// Unordered vertex pair, stored with u <= v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  constexpr Edge() = default;
  constexpr Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  constexpr bool touches(Vertex x) const { return u == x || v == x; }
  constexpr Vertex other(Vertex x) const { return x == u ? v : u; }

  friend constexpr auto operator<=>(const Edge &, const Edge &) = default;
};

/// Undirected simple graph on vertices 0..n-1.
///
/// Immutable after construction. The edge list is kept sorted, so iteration
/// order is deterministic and two graphs compare equal iff they have the same
/// order and edge set.
class Graph {
public:
  explicit Graph(std::size_t n) : Graph(n, {}) {}

  Graph(std::size_t n, std::vector<Edge> edges)
      : n_(n), edges_(std::move(edges)), adjacency_(n) {
    if (n_ == 0)
      throw GraphError("graph must have at least one vertex");
    std::sort(edges_.begin(), edges_.end());
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      const Edge &e = edges_[i];
      if (e.u == e.v)
        throw GraphError("self-loop at vertex " + std::to_string(e.u));
      if (e.v >= n_)
        throw GraphError("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                         ") has endpoint outside [0," + std::to_string(n_) + ")");
      if (i > 0 && edges_[i - 1] == e)
        throw GraphError("duplicate edge (" + std::to_string(e.u) + "," +
                         std::to_string(e.v) + ")");
      adjacency_[e.u].push_back(e.v);
      adjacency_[e.v].push_back(e.u);
    }
    for (auto &nbrs : adjacency_)
      std::sort(nbrs.begin(), nbrs.end());
  }

  std::size_t order() const { return n_; }
  std::size_t size() const { return edges_.size(); }

  std::span<const Edge> edges() const { return edges_; }
  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_.at(v); }
  std::size_t degree(Vertex v) const { return adjacency_.at(v).size(); }

  bool has_edge(Vertex a, Vertex b) const {
    if (a >= n_ || b >= n_ || a == b)
      return false;
    return std::binary_search(edges_.begin(), edges_.end(), Edge(a, b));
  }

  std::size_t max_degree() const {
    std::size_t d = 0;
    for (const auto &nbrs : adjacency_)
      d = std::max(d, nbrs.size());
    return d;
  }

  friend bool operator==(const Graph &a, const Graph &b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

private:
  std::size_t n_;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
};

namespace detail {

inline std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos)
      end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r')
      line.remove_suffix(1);
    lines.push_back(line);
    start = end + 1;
  }
  return lines;
}

inline bool is_blank(std::string_view line) {
  return line.find_first_not_of(" \t") == std::string_view::npos;
}

// Parses exactly two non-negative integers from the line.
inline bool read_pair(std::string_view line, long long &a, long long &b) {
  std::istringstream in{std::string(line)};
  std::string rest;
  if (!(in >> a >> b))
    return false;
  return !(in >> rest);
}

} // namespace detail

/// Parses the edge-list interchange format: a header line "n m" followed by
/// m lines "u v". Trailing blank lines are ignored.
inline Graph parse_graph(std::string_view text) {
  auto lines = detail::split_lines(text);
  while (!lines.empty() && detail::is_blank(lines.back()))
    lines.pop_back();
  if (lines.empty())
    throw ParseError(1, "empty document, expected header \"n m\"");

  long long n = 0;
  long long m = 0;
  if (!detail::read_pair(lines[0], n, m) || n < 1 || m < 0)
    throw ParseError(1, "malformed header, expected \"n m\" with n >= 1, m >= 0");

  const std::size_t listed = lines.size() - 1;
  if (listed != static_cast<std::size_t>(m))
    throw ParseError(listed < static_cast<std::size_t>(m) ? lines.size() + 1
                                                          : static_cast<std::size_t>(m) + 2,
                     "header declares " + std::to_string(m) + " edges but " +
                         std::to_string(listed) + " edge lines follow");

  std::vector<Edge> edges;
  std::set<Edge> seen;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    long long a = 0;
    long long b = 0;
    if (!detail::read_pair(lines[i], a, b))
      throw ParseError(i + 1, "malformed edge line, expected \"u v\"");
    if (a < 0 || b < 0 || a >= n || b >= n)
      throw ParseError(i + 1, "vertex index out of range [0," + std::to_string(n) + ")");
    if (a == b)
      throw ParseError(i + 1, "self-loop at vertex " + std::to_string(a));
    Edge e(static_cast<Vertex>(a), static_cast<Vertex>(b));
    if (!seen.insert(e).second)
      throw ParseError(i + 1, "duplicate edge " + std::to_string(e.u) + " " + std::to_string(e.v));
    edges.push_back(e);
  }
  return Graph(static_cast<std::size_t>(n), std::move(edges));
}

/// Inverse of parse_graph; edges are written in sorted order.
inline std::string to_edge_list(const Graph &g) {
  std::ostringstream out;
  out << g.order() << ' ' << g.size() << '\n';
  for (const Edge &e : g.edges())
    out << e.u << ' ' << e.v << '\n';
  return out.str();
}

/// BFS distances from `source`; `unreachable` for other components.
inline std::vector<std::size_t> distances_from(const Graph &g, Vertex source) {
  std::vector<std::size_t> dist(g.order(), unreachable);
  std::queue<Vertex> frontier;
  dist.at(source) = 0;
  frontier.push(source);
  while (!frontier.empty()) {
    Vertex x = frontier.front();
    frontier.pop();
    for (Vertex y : g.neighbors(x)) {
      if (dist[y] == unreachable) {
        dist[y] = dist[x] + 1;
        frontier.push(y);
      }
    }
  }
  return dist;
}

/// Connected components, each sorted, listed by smallest vertex.
inline std::vector<std::vector<Vertex>> components(const Graph &g) {
  std::vector<std::vector<Vertex>> result;
  std::vector<bool> assigned(g.order(), false);
  for (Vertex s = 0; s < g.order(); ++s) {
    if (assigned[s])
      continue;
    auto dist = distances_from(g, s);
    std::vector<Vertex> comp;
    for (Vertex x = 0; x < g.order(); ++x) {
      if (dist[x] != unreachable) {
        comp.push_back(x);
        assigned[x] = true;
      }
    }
    result.push_back(std::move(comp));
  }
  return result;
}

inline bool is_connected(const Graph &g) {
  auto dist = distances_from(g, 0);
  return std::none_of(dist.begin(), dist.end(), [](std::size_t d) { return d == unreachable; });
}

/// Returns a copy of `g` with `remove` deleted and `add` inserted.
inline Graph apply_edge_rewrite(const Graph &g, std::span<const Edge> remove,
                                std::span<const Edge> add) {
  std::set<Edge> edges(g.edges().begin(), g.edges().end());
  for (const Edge &e : remove) {
    if (edges.erase(e) == 0)
      throw GraphError("cannot remove absent edge (" + std::to_string(e.u) + "," +
                       std::to_string(e.v) + ")");
  }
  for (const Edge &e : add) {
    if (e.u == e.v || e.v >= g.order())
      throw GraphError("cannot add invalid edge (" + std::to_string(e.u) + "," +
                       std::to_string(e.v) + ")");
    if (!edges.insert(e).second)
      throw GraphError("cannot add existing edge (" + std::to_string(e.u) + "," +
                       std::to_string(e.v) + ")");
  }
  return Graph(g.order(), std::vector<Edge>(edges.begin(), edges.end()));
}

/// Relabels vertex x as perm[x].
inline Graph permute(const Graph &g, std::span<const Vertex> perm) {
  if (perm.size() != g.order())
    throw GraphError("permutation size does not match graph order");
  std::vector<Edge> edges;
  edges.reserve(g.size());
  for (const Edge &e : g.edges())
    edges.emplace_back(perm[e.u], perm[e.v]);
  return Graph(g.order(), std::move(edges));
}

} // namespace cactus
