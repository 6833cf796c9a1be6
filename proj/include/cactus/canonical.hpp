#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "cactus/graph.hpp"

namespace cactus {

inline constexpr std::size_t canonical_max_order = 10;

/// Isomorphism-class certificate for small graphs. Equal certificates mean
/// isomorphic graphs and vice versa.
struct CanonicalForm {
  std::vector<std::uint8_t> bytes;

  std::string hex() const {
    static constexpr char digits[] = "0123456789abcdef";
    std::string out;
    out.reserve(2 * bytes.size());
    for (std::uint8_t b : bytes) {
      out.push_back(digits[b >> 4]);
      out.push_back(digits[b & 0xf]);
    }
    return out;
  }

  friend auto operator<=>(const CanonicalForm &, const CanonicalForm &) = default;
  friend bool operator==(const CanonicalForm &, const CanonicalForm &) = default;
};

namespace detail {

// Colour refinement starting from degrees. Colours are ranks of sorted
// (colour, neighbour-colour multiset) signatures, so they are invariant
// under relabelling.
inline std::vector<std::size_t> refined_colours(const Graph &g) {
  const std::size_t n = g.order();
  std::vector<std::size_t> colour(n);
  for (Vertex v = 0; v < n; ++v)
    colour[v] = g.degree(v);
  std::size_t classes = 0;
  while (true) {
    std::vector<std::vector<std::size_t>> sig(n);
    for (Vertex v = 0; v < n; ++v) {
      sig[v].push_back(colour[v]);
      std::vector<std::size_t> nbr;
      for (Vertex w : g.neighbors(v))
        nbr.push_back(colour[w]);
      std::sort(nbr.begin(), nbr.end());
      sig[v].insert(sig[v].end(), nbr.begin(), nbr.end());
    }
    std::map<std::vector<std::size_t>, std::size_t> rank;
    for (const auto &s : sig)
      rank.emplace(s, 0);
    std::size_t r = 0;
    for (auto &[s, idx] : rank)
      idx = r++;
    for (Vertex v = 0; v < n; ++v)
      colour[v] = rank[sig[v]];
    if (rank.size() == classes)
      break;
    classes = rank.size();
  }
  return colour;
}

} // namespace detail

/// Maximum upper-triangle adjacency code over all vertex orders that respect
/// the refined colour classes. Exhaustive within classes, so exact.
inline CanonicalForm canonical_form(const Graph &g) {
  const std::size_t n = g.order();
  if (n > canonical_max_order)
    throw PreconditionError("canonical_form supports at most " +
                            std::to_string(canonical_max_order) + " vertices");

  const auto colour = detail::refined_colours(g);
  const std::size_t num_classes = *std::max_element(colour.begin(), colour.end()) + 1;
  std::vector<std::vector<Vertex>> cells(num_classes);
  for (Vertex v = 0; v < n; ++v)
    cells[colour[v]].push_back(v);

  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (const Edge &e : g.edges())
    adj[e.u][e.v] = adj[e.v][e.u] = true;

  std::vector<Vertex> order(n);
  std::uint64_t best = 0;
  bool first = true;
  while (true) {
    std::size_t pos = 0;
    for (const auto &cell : cells)
      for (Vertex v : cell)
        order[pos++] = v;
    std::uint64_t code = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        code = (code << 1) | (adj[order[i]][order[j]] ? 1u : 0u);
    if (first || code > best) {
      best = code;
      first = false;
    }
    // odometer over the permutations of each cell
    std::size_t c = cells.size();
    while (c > 0 && !std::next_permutation(cells[c - 1].begin(), cells[c - 1].end()))
      --c;
    if (c == 0)
      break;
  }

  CanonicalForm cf;
  cf.bytes.push_back(static_cast<std::uint8_t>(n));
  cf.bytes.push_back(static_cast<std::uint8_t>(num_classes));
  for (const auto &cell : cells)
    cf.bytes.push_back(static_cast<std::uint8_t>(cell.size()));
  for (int shift = 56; shift >= 0; shift -= 8)
    cf.bytes.push_back(static_cast<std::uint8_t>((best >> shift) & 0xff));
  return cf;
}

} // namespace cactus
