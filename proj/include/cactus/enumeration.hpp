#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "cactus/canonical.hpp"
#include "cactus/graph.hpp"

namespace cactus {

inline constexpr std::size_t enumeration_max_order = 8;

/// One representative per isomorphism class of connected cacti with n
/// vertices and k cycles, ordered by certificate.
///
/// Cacti are grown from a single vertex by hanging either a pendant edge or a
/// cycle of length >= 3 on an existing vertex; every cactus arises this way
/// by peeling leaf blocks. Each intermediate level is deduplicated.
inline std::vector<Graph> enumerate_cacti(std::size_t n, std::size_t k) {
  if (n < 1 || n > enumeration_max_order)
    throw PreconditionError("enumerate_cacti supports 1 <= n <= " +
                            std::to_string(enumeration_max_order));
  if (2 * k + 1 > n)
    throw PreconditionError("no cactus on " + std::to_string(n) + " vertices has " +
                            std::to_string(k) + " cycles");

  // levels[j][c]: classes with j vertices and c cycles
  std::vector<std::vector<std::map<CanonicalForm, Graph>>> levels(
      n + 1, std::vector<std::map<CanonicalForm, Graph>>(k + 1));
  Graph seed(1);
  levels[1][0].emplace(canonical_form(seed), seed);

  // Can a state with j vertices and c cycles still reach (n, k)?
  auto feasible = [&](std::size_t j, std::size_t c) { return j <= n && c <= k && n - j >= 2 * (k - c); };
  auto insert = [&](std::size_t j, std::size_t c, Graph g) {
    auto cf = canonical_form(g);
    levels[j][c].try_emplace(std::move(cf), std::move(g));
  };

  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t c = 0; c <= k; ++c) {
      for (const auto &[cf, g] : levels[j][c]) {
        const std::vector<Edge> base(g.edges().begin(), g.edges().end());
        for (Vertex x = 0; x < j; ++x) {
          if (feasible(j + 1, c)) {
            auto edges = base;
            edges.emplace_back(x, j);
            insert(j + 1, c, Graph(j + 1, std::move(edges)));
          }
          for (std::size_t len = 3; feasible(j + len - 1, c + 1); ++len) {
            auto edges = base;
            Vertex prev = x;
            for (Vertex y = j; y < j + len - 1; ++y) {
              edges.emplace_back(prev, y);
              prev = y;
            }
            edges.emplace_back(prev, x);
            insert(j + len - 1, c + 1, Graph(j + len - 1, std::move(edges)));
          }
        }
      }
    }
  }

  std::vector<Graph> result;
  for (auto &[cf, g] : levels[n][k])
    result.push_back(g);
  return result;
}

} // namespace cactus
