#pragma once

#include <algorithm>
#include <cmath>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cactus/graph.hpp"
#include "cactus/linalg.hpp"

namespace cactus {

/// Mixing parameter of A_alpha = alpha D + (1 - alpha) A, on [0, 1].
class Alpha {
public:
  explicit Alpha(double value) : value_(value) {
    if (!(value >= 0.0 && value <= 1.0))
      throw AlphaDomainError("alpha must lie in [0,1], got " + std::to_string(value));
  }

  double value() const { return value_; }
  bool below_one() const { return value_ < 1.0; }

  friend bool operator==(Alpha, Alpha) = default;

private:
  double value_;
};

/// Strict radius-increase and Perron uniqueness claims only hold for alpha < 1.
inline void require_alpha_below_one(Alpha alpha, std::string_view operation) {
  if (!alpha.below_one())
    throw AlphaDomainError(std::string(operation) + " requires alpha < 1");
}

inline SymmetricMatrix alpha_matrix(const Graph &g, Alpha alpha) {
  const double a = alpha.value();
  SymmetricMatrix m(g.order());
  for (Vertex v = 0; v < g.order(); ++v)
    m.set(v, v, a * static_cast<double>(g.degree(v)));
  for (const Edge &e : g.edges())
    m.set(e.u, e.v, 1.0 - a);
  return m;
}

inline SymmetricMatrix adjacency_matrix(const Graph &g) {
  SymmetricMatrix m(g.order());
  for (const Edge &e : g.edges())
    m.set(e.u, e.v, 1.0);
  return m;
}

/// Q = D + A, built directly rather than through alpha_matrix.
inline SymmetricMatrix signless_laplacian(const Graph &g) {
  SymmetricMatrix m(g.order());
  for (Vertex v = 0; v < g.order(); ++v)
    m.set(v, v, static_cast<double>(g.degree(v)));
  for (const Edge &e : g.edges())
    m.set(e.u, e.v, 1.0);
  return m;
}

namespace detail {

inline void require_dimension(const Graph &g, std::span<const double> x) {
  if (x.size() != g.order())
    throw PreconditionError("vector has " + std::to_string(x.size()) +
                            " entries, graph has " + std::to_string(g.order()) + " vertices");
}

} // namespace detail

/// X^T A_alpha X evaluated edge-wise, without forming the matrix.
inline double quadratic_form(const Graph &g, Alpha alpha, std::span<const double> x) {
  detail::require_dimension(g, x);
  const double a = alpha.value();
  double diagonal = 0.0;
  for (Vertex v = 0; v < g.order(); ++v)
    diagonal += x[v] * x[v] * static_cast<double>(g.degree(v));
  double cross = 0.0;
  for (const Edge &e : g.edges())
    cross += x[e.u] * x[e.v];
  return a * diagonal + 2.0 * (1.0 - a) * cross;
}

inline double rayleigh_quotient(const Graph &g, Alpha alpha, std::span<const double> x) {
  const double len2 = dot(x, x);
  if (len2 == 0.0)
    throw PreconditionError("Rayleigh quotient of the zero vector");
  return quadratic_form(g, alpha, x) / len2;
}

/// max_i |lambda x_i - alpha d_i x_i - (1 - alpha) sum_{j ~ i} x_j|
inline double eigen_residual(const Graph &g, Alpha alpha, double lambda,
                             std::span<const double> x) {
  detail::require_dimension(g, x);
  const double a = alpha.value();
  double worst = 0.0;
  for (Vertex v = 0; v < g.order(); ++v) {
    double nbr_sum = 0.0;
    for (Vertex w : g.neighbors(v))
      nbr_sum += x[w];
    const double r = lambda * x[v] - a * static_cast<double>(g.degree(v)) * x[v] - (1.0 - a) * nbr_sum;
    worst = std::max(worst, std::abs(r));
  }
  return worst;
}

inline SpectralResult full_spectrum(const Graph &g, Alpha alpha, bool want_vectors = false) {
  return jacobi_eigen(alpha_matrix(g, alpha), want_vectors);
}

struct PerronPair {
  double rho = 0.0;
  std::vector<double> vector; // unit, entrywise positive
};

/// Spectral radius of A_alpha(g) with its Perron vector, from the Jacobi
/// solver. Requires a connected graph and alpha < 1.
inline PerronPair spectral_radius(const Graph &g, Alpha alpha) {
  require_alpha_below_one(alpha, "spectral_radius");
  if (!is_connected(g))
    throw PreconditionError("spectral_radius requires a connected graph");
  SpectralResult s = full_spectrum(g, alpha, true);
  for (double x : s.perron_vector)
    if (!(x > 0.0))
      throw NumericalError("Perron vector has a non-positive entry");
  return {s.perron_value, std::move(s.perron_vector)};
}

/// Largest adjacency eigenvalue, computed from A directly.
inline double adjacency_spectral_radius(const Graph &g) {
  return jacobi_eigen(adjacency_matrix(g), false).perron_value;
}

/// Largest signless Laplacian eigenvalue, computed from Q directly.
inline double signless_laplacian_spectral_radius(const Graph &g) {
  return jacobi_eigen(signless_laplacian(g), false).perron_value;
}

} // namespace cactus
