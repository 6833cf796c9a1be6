#pragma once

// Brute-force reference implementations used only by the tests. They share
// no code with the library beyond the Graph container.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "cactus/graph.hpp"

namespace oracle {

using cactus::Edge;
using cactus::Graph;
using cactus::Vertex;

inline std::vector<std::vector<bool>> adjacency(const Graph &g) {
  std::vector<std::vector<bool>> a(g.order(), std::vector<bool>(g.order(), false));
  for (const Edge &e : g.edges())
    a[e.u][e.v] = a[e.v][e.u] = true;
  return a;
}

inline bool connected(const std::vector<std::vector<bool>> &a) {
  const std::size_t n = a.size();
  std::vector<bool> seen(n, false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  while (!stack.empty()) {
    auto x = stack.back();
    stack.pop_back();
    for (std::size_t y = 0; y < n; ++y)
      if (a[x][y] && !seen[y]) {
        seen[y] = true;
        stack.push_back(y);
      }
  }
  return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

// Number of simple paths from s to t, capped at `cap`.
inline int count_paths(const std::vector<std::vector<bool>> &a, std::size_t s, std::size_t t, int cap) {
  std::vector<bool> on(a.size(), false);
  int found = 0;
  std::function<void(std::size_t)> go = [&](std::size_t x) {
    if (found >= cap)
      return;
    if (x == t) {
      ++found;
      return;
    }
    on[x] = true;
    for (std::size_t y = 0; y < a.size(); ++y)
      if (a[x][y] && !on[y])
        go(y);
    on[x] = false;
  };
  go(s);
  return found;
}

// Connected, and every edge lies on at most one cycle.
inline bool is_cactus(const Graph &g) {
  auto a = adjacency(g);
  if (!connected(a))
    return false;
  for (const Edge &e : g.edges()) {
    a[e.u][e.v] = a[e.v][e.u] = false;
    const int paths = count_paths(a, e.u, e.v, 2);
    a[e.u][e.v] = a[e.v][e.u] = true;
    if (paths > 1)
      return false;
  }
  return true;
}

// Minimum adjacency bit string over all n! relabellings.
inline std::uint64_t brute_code(const Graph &g) {
  const std::size_t n = g.order();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t best = ~std::uint64_t{0};
  do {
    std::uint64_t code = 0;
    for (const Edge &e : g.edges()) {
      std::size_t i = perm[e.u];
      std::size_t j = perm[e.v];
      if (i > j)
        std::swap(i, j);
      code |= std::uint64_t{1} << (j * (j - 1) / 2 + i);
    }
    best = std::min(best, code);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

// Isomorphism classes of cacti on n vertices, keyed by cycle count, from
// every labelled graph on n vertices. Practical for n <= 6.
inline std::map<std::size_t, std::set<std::uint64_t>> cactus_classes(std::size_t n) {
  std::vector<Edge> pairs;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j)
      pairs.emplace_back(i, j);
  std::map<std::size_t, std::set<std::uint64_t>> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
    const auto m = static_cast<std::size_t>(__builtin_popcountll(mask));
    if (m + 1 < n || m > 3 * (n - 1) / 2)
      continue;
    std::vector<Edge> edges;
    for (std::size_t b = 0; b < pairs.size(); ++b)
      if (mask >> b & 1)
        edges.push_back(pairs[b]);
    Graph g(n, edges);
    if (!is_cactus(g))
      continue;
    out[m + 1 - n].insert(brute_code(g));
  }
  return out;
}

// AHU string of the tree rooted at r.
inline std::string ahu(const std::vector<std::vector<std::size_t>> &adj, std::size_t r, std::size_t parent) {
  std::vector<std::string> kids;
  for (auto c : adj[r])
    if (c != parent)
      kids.push_back(ahu(adj, c, r));
  std::sort(kids.begin(), kids.end());
  std::string s = "(";
  for (auto &k : kids)
    s += k;
  return s + ")";
}

// Number of unlabelled trees on n vertices via all Pruefer sequences.
inline std::size_t count_trees(std::size_t n) {
  if (n <= 2)
    return 1;
  std::set<std::string> seen;
  std::vector<std::size_t> seq(n - 2, 0);
  while (true) {
    std::vector<std::size_t> degree(n, 1);
    for (auto s : seq)
      ++degree[s];
    std::vector<std::vector<std::size_t>> adj(n);
    for (auto s : seq) {
      std::size_t leaf = 0;
      while (degree[leaf] != 1)
        ++leaf;
      adj[leaf].push_back(s);
      adj[s].push_back(leaf);
      --degree[leaf];
      --degree[s];
    }
    std::vector<std::size_t> rest;
    for (std::size_t v = 0; v < n; ++v)
      if (degree[v] == 1)
        rest.push_back(v);
    adj[rest[0]].push_back(rest[1]);
    adj[rest[1]].push_back(rest[0]);

    // canonical over all roots: the minimum rooted string
    std::string best;
    for (std::size_t r = 0; r < n; ++r) {
      auto s = ahu(adj, r, n);
      if (best.empty() || s < best)
        best = s;
    }
    seen.insert(best);

    std::size_t i = 0;
    while (i < seq.size() && ++seq[i] == n)
      seq[i++] = 0;
    if (i == seq.size())
      break;
  }
  return seen.size();
}

} // namespace oracle
