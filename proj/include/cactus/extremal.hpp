#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "cactus/alpha_spectral.hpp"
#include "cactus/graph.hpp"
#include "cactus/linalg.hpp"
#include "cactus/profile.hpp"

namespace cactus {

/// Shape of the extremal cactus C^c(n, k): k triangles and t = n - 2k - 1
/// pendant edges all meeting at one centre vertex.
struct ExtremalParams {
  std::size_t n = 1;
  std::size_t k = 0;
  std::size_t t = 0;

  static ExtremalParams make(std::size_t n, std::size_t k) {
    if (n < 1)
      throw PreconditionError("extremal cactus needs n >= 1");
    if (2 * k + 1 > n)
      throw PreconditionError("no cactus C^c(" + std::to_string(n) + "," + std::to_string(k) +
                              "): need 2k + 1 <= n");
    return {n, k, n - 2 * k - 1};
  }

  std::size_t edge_count() const { return n - 1 + k; }

  friend bool operator==(const ExtremalParams &, const ExtremalParams &) = default;
};

/// Centre 0, triangles (0, 2i-1, 2i) for i = 1..k, pendant edges (0, 2k+j).
inline Graph build_cc(std::size_t n, std::size_t k) {
  const ExtremalParams p = ExtremalParams::make(n, k);
  std::vector<Edge> edges;
  for (std::size_t i = 1; i <= p.k; ++i) {
    edges.emplace_back(0, 2 * i - 1);
    edges.emplace_back(0, 2 * i);
    edges.emplace_back(2 * i - 1, 2 * i);
  }
  for (std::size_t j = 1; j <= p.t; ++j)
    edges.emplace_back(0, 2 * p.k + j);
  return Graph(n, std::move(edges));
}

/// True iff g is isomorphic to some C^c(n, k): a connected cactus whose
/// blocks are edges or triangles sharing one common vertex.
inline bool has_cc_shape(const Graph &g) {
  const CactusProfile p = cactus_profile(g);
  if (!p.is_cactus)
    return false;
  for (const Block &b : p.blocks)
    if (!b.is_bridge() && b.vertices.size() != 3)
      return false;
  if (p.blocks.size() <= 1)
    return true;
  if (p.cut_vertices.size() != 1)
    return false;
  const Vertex centre = p.cut_vertices.front();
  return std::all_of(p.blocks.begin(), p.blocks.end(),
                     [&](const Block &b) { return b.contains(centre); });
}

/// The cubic factor f of det(A_alpha(C^c) - lambda I), expanded in lambda.
///
/// With mu = alpha - lambda:
///   f = mu^3 + (n alpha - 2 alpha + 1) mu^2
///       + ((1 - n) alpha^2 + (3n - 4) alpha + 1 - n) mu - t (1 - alpha)^2
inline CubicPolynomial cc_cubic(const ExtremalParams &p, Alpha alpha) {
  const double a = alpha.value();
  const double n = static_cast<double>(p.n);
  const double t = static_cast<double>(p.t);
  const double B = n * a - 2.0 * a + 1.0;
  const double C = (1.0 - n) * a * a + (3.0 * n - 4.0) * a + 1.0 - n;
  const double D = -t * (1.0 - a) * (1.0 - a);
  // mu^3 = -l^3 + 3a l^2 - 3a^2 l + a^3,  mu^2 = l^2 - 2a l + a^2
  return {-1.0, 3.0 * a + B, -3.0 * a * a - 2.0 * a * B - C, a * a * a + B * a * a + C * a + D};
}

/// f evaluated through the factored form
///   ((n-1) alpha - lambda)(alpha - lambda)(alpha - lambda + 1)
///   - t (1-alpha)^2 (alpha - lambda + 1) - 2k (1-alpha)^2 (alpha - lambda).
inline double cc_cubic_factored(const ExtremalParams &p, Alpha alpha, double lambda) {
  const double a = alpha.value();
  const double w = (1.0 - a) * (1.0 - a);
  const double mu = a - lambda;
  return ((static_cast<double>(p.n) - 1.0) * a - lambda) * mu * (mu + 1.0) -
         static_cast<double>(p.t) * w * (mu + 1.0) - 2.0 * static_cast<double>(p.k) * w * mu;
}

enum class Provenance { alpha_factor, alpha_plus_one_factor, triangle_factor, cubic };

inline std::string_view to_string(Provenance p) {
  switch (p) {
  case Provenance::alpha_factor:
    return "alpha_factor";
  case Provenance::alpha_plus_one_factor:
    return "alpha_plus_one_factor";
  case Provenance::triangle_factor:
    return "triangle_factor";
  case Provenance::cubic:
    return "cubic";
  }
  return "unknown";
}

struct SpectrumEntry {
  double value = 0.0;
  std::size_t multiplicity = 0;
  Provenance provenance = Provenance::cubic;
};

/// Closed-form eigenvalue multiset. Entries keep their factor of origin, so
/// coinciding values (alpha and 3 alpha - 1 at alpha = 1/2) stay separate.
struct ExtremalSpectrum {
  double alpha = 0.0;
  std::vector<SpectrumEntry> entries;

  std::size_t total_multiplicity() const {
    std::size_t total = 0;
    for (const auto &e : entries)
      total += e.multiplicity;
    return total;
  }

  std::size_t multiplicity_of(Provenance p) const {
    std::size_t total = 0;
    for (const auto &e : entries)
      if (e.provenance == p)
        total += e.multiplicity;
    return total;
  }

  /// Every eigenvalue repeated by multiplicity, sorted descending.
  std::vector<double> sorted_values() const {
    std::vector<double> out;
    for (const auto &e : entries)
      out.insert(out.end(), e.multiplicity, e.value);
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
  }

  const SpectrumEntry &largest() const {
    return *std::max_element(entries.begin(), entries.end(),
                             [](const auto &a, const auto &b) { return a.value < b.value; });
  }
};

inline constexpr double cancellation_tolerance = 1e-7;

namespace detail {

// Removes `root` from the cubic: confirms a numeric root lies within
// cancellation_tolerance, then divides f by (lambda - root) exactly.
inline std::array<double, 2> deflate_known_root(const CubicPolynomial &f, double root,
                                                std::string_view factor) {
  const auto roots = solve_cubic_real(f);
  const bool present = std::any_of(roots.begin(), roots.end(), [&](double r) {
    return std::abs(r - root) <= cancellation_tolerance;
  });
  if (!present)
    throw NumericalError("cubic factor lacks the cancelled root " + std::string(factor) + " = " +
                         std::to_string(root));
  const double q2 = f.c3;
  const double q1 = f.c2 + q2 * root;
  const double q0 = f.c1 + q1 * root;
  return solve_quadratic_real(q2, q1, q0);
}

} // namespace detail

/// Eigenvalues of A_alpha(C^c(n, k)) assembled from the factorisation
///   (alpha - l)^(t-1) (alpha - l + 1)^(k-1) (3 alpha - l - 1)^k f(l).
/// When t = 0 (resp. k = 0) the negative exponent is absorbed by removing the
/// root alpha (resp. alpha + 1) from f.
inline ExtremalSpectrum cc_spectrum(const ExtremalParams &p, Alpha alpha) {
  const double a = alpha.value();
  ExtremalSpectrum s;
  s.alpha = a;
  if (p.n == 1) {
    s.entries.push_back({0.0, 1, Provenance::cubic});
    return s;
  }
  if (p.t >= 2)
    s.entries.push_back({a, p.t - 1, Provenance::alpha_factor});
  if (p.k >= 2)
    s.entries.push_back({a + 1.0, p.k - 1, Provenance::alpha_plus_one_factor});
  if (p.k >= 1)
    s.entries.push_back({3.0 * a - 1.0, p.k, Provenance::triangle_factor});

  const CubicPolynomial f = cc_cubic(p, alpha);
  if (p.t == 0) {
    for (double r : detail::deflate_known_root(f, a, "alpha"))
      s.entries.push_back({r, 1, Provenance::cubic});
  } else if (p.k == 0) {
    for (double r : detail::deflate_known_root(f, a + 1.0, "alpha + 1"))
      s.entries.push_back({r, 1, Provenance::cubic});
  } else {
    for (double r : solve_cubic_real(f))
      s.entries.push_back({r, 1, Provenance::cubic});
  }
  return s;
}

/// Spectrum of A_alpha(S_n): alpha (n - 2 times) and
/// (alpha n +- sqrt(alpha^2 n^2 + 4 (n - 1)(1 - 2 alpha))) / 2.
inline ExtremalSpectrum star_spectrum(std::size_t n, Alpha alpha) {
  if (n < 2)
    throw PreconditionError("star_spectrum needs n >= 2");
  const double a = alpha.value();
  const double nn = static_cast<double>(n);
  const double root = std::sqrt(a * a * nn * nn + 4.0 * (nn - 1.0) * (1.0 - 2.0 * a));
  ExtremalSpectrum s;
  s.alpha = a;
  if (n > 2)
    s.entries.push_back({a, n - 2, Provenance::alpha_factor});
  s.entries.push_back({(a * nn + root) / 2.0, 1, Provenance::cubic});
  s.entries.push_back({(a * nn - root) / 2.0, 1, Provenance::cubic});
  return s;
}

inline double cc_spectral_radius(const ExtremalParams &p, Alpha alpha) {
  return cc_spectrum(p, alpha).largest().value;
}

/// Right-hand side of the determinant factorisation at lambda, with the
/// t = 0 / k = 0 cancellations applied so every exponent is nonnegative.
inline double charpoly_product(const ExtremalParams &p, Alpha alpha, double lambda) {
  const double a = alpha.value();
  const double w = (1.0 - a) * (1.0 - a);
  const double n = static_cast<double>(p.n);
  const double mu = a - lambda;
  const int k = static_cast<int>(p.k);
  const int t = static_cast<int>(p.t);
  if (p.n == 1)
    return -lambda;
  if (p.t == 0) {
    const double g = ((n - 1.0) * a - lambda) * (mu + 1.0) - 2.0 * k * w;
    return std::pow(mu + 1.0, k - 1) * std::pow(3.0 * a - lambda - 1.0, k) * g;
  }
  if (p.k == 0) {
    const double h = ((n - 1.0) * a - lambda) * mu - t * w;
    return std::pow(mu, t - 1) * h;
  }
  return std::pow(mu, t - 1) * std::pow(mu + 1.0, k - 1) * std::pow(3.0 * a - lambda - 1.0, k) *
         cc_cubic_factored(p, alpha, lambda);
}

struct CharpolyTrial {
  double lambda = 0.0;
  double determinant = 0.0;
  double product = 0.0;
  double relative_error = 0.0;
};

struct CharpolyReport {
  ExtremalParams params;
  double alpha = 0.0;
  std::vector<CharpolyTrial> trials;
  double max_relative_error = 0.0;
  double tolerance = 1e-7;
  bool pass = true;
  std::optional<double> failing_lambda;
};

/// Compares det(A_alpha(C^c) - lambda I) against charpoly_product at random
/// lambda drawn from [-3, n + 1], skipping points within 1e-3 of an eigenvalue.
inline CharpolyReport verify_charpoly_identity(const ExtremalParams &p, Alpha alpha,
                                               std::size_t trials, std::uint64_t seed = 0) {
  const Graph g = build_cc(p.n, p.k);
  const SymmetricMatrix m = alpha_matrix(g, alpha);
  const std::vector<double> eigenvalues = jacobi_eigen(m, false).eigenvalues;

  CharpolyReport report;
  report.params = p;
  report.alpha = alpha.value();
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> draw(-3.0, static_cast<double>(p.n) + 1.0);
  while (report.trials.size() < trials) {
    const double lambda = draw(rng);
    const bool near_eigenvalue = std::any_of(eigenvalues.begin(), eigenvalues.end(),
                                             [&](double e) { return std::abs(e - lambda) < 1e-3; });
    if (near_eigenvalue)
      continue;
    CharpolyTrial trial;
    trial.lambda = lambda;
    trial.determinant = determinant(m.shifted(lambda));
    trial.product = charpoly_product(p, alpha, lambda);
    const double scale = std::max(std::abs(trial.determinant), std::abs(trial.product));
    trial.relative_error = scale == 0.0 ? 0.0 : std::abs(trial.determinant - trial.product) / scale;
    report.max_relative_error = std::max(report.max_relative_error, trial.relative_error);
    if (trial.relative_error > report.tolerance && report.pass) {
      report.pass = false;
      report.failing_lambda = lambda;
    }
    report.trials.push_back(trial);
  }
  return report;
}

} // namespace cactus
