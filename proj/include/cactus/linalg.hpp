#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <functional>
#include <numbers>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "cactus/error.hpp"

namespace cactus {

/// Dense real symmetric matrix, row-major. Writes go through set(), which
/// updates both triangles, so the stored matrix is always exactly symmetric.
class SymmetricMatrix {
public:
  explicit SymmetricMatrix(std::size_t order) : n_(order), a_(order * order, 0.0) {}

  /// Builds from square rows; rejects asymmetric or non-finite input.
  static SymmetricMatrix from_rows(const std::vector<std::vector<double>> &rows) {
    SymmetricMatrix m(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != rows.size())
        throw NumericalError("matrix rows must form a square");
      for (std::size_t j = 0; j < rows.size(); ++j) {
        if (!std::isfinite(rows[i][j]))
          throw NumericalError("matrix entry is not finite");
        if (rows[i][j] != rows[j][i])
          throw NumericalError("matrix is not symmetric at (" + std::to_string(i) + "," +
                               std::to_string(j) + ")");
        m.a_[i * m.n_ + j] = rows[i][j];
      }
    }
    return m;
  }

  std::size_t order() const { return n_; }

  double operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

  void set(std::size_t i, std::size_t j, double value) {
    a_[i * n_ + j] = value;
    a_[j * n_ + i] = value;
  }

  std::span<const double> data() const { return a_; }

  bool all_finite() const {
    return std::all_of(a_.begin(), a_.end(), [](double x) { return std::isfinite(x); });
  }

  bool nonnegative() const {
    return std::all_of(a_.begin(), a_.end(), [](double x) { return x >= 0.0; });
  }

  double trace() const {
    double t = 0.0;
    for (std::size_t i = 0; i < n_; ++i)
      t += (*this)(i, i);
    return t;
  }

  double frobenius_squared() const {
    return std::inner_product(a_.begin(), a_.end(), a_.begin(), 0.0);
  }

  /// Maximum absolute row sum.
  double inf_norm() const {
    double best = 0.0;
    for (std::size_t i = 0; i < n_; ++i) {
      double row = 0.0;
      for (std::size_t j = 0; j < n_; ++j)
        row += std::abs((*this)(i, j));
      best = std::max(best, row);
    }
    return best;
  }

  std::vector<double> multiply(std::span<const double> x) const {
    if (x.size() != n_)
      throw NumericalError("dimension mismatch in matrix-vector product");
    std::vector<double> y(n_, 0.0);
    for (std::size_t i = 0; i < n_; ++i) {
      double s = 0.0;
      for (std::size_t j = 0; j < n_; ++j)
        s += a_[i * n_ + j] * x[j];
      y[i] = s;
    }
    return y;
  }

  /// M - shift * I
  SymmetricMatrix shifted(double shift) const {
    SymmetricMatrix m = *this;
    for (std::size_t i = 0; i < n_; ++i)
      m.a_[i * n_ + i] -= shift;
    return m;
  }

private:
  std::size_t n_;
  std::vector<double> a_;
};

/// Eigenvalues sorted descending. When vectors were requested,
/// `eigenvectors[i]` is a unit eigenvector for `eigenvalues[i]` and
/// `perron_vector` is eigenvectors[0] signed to have a positive sum;
/// otherwise both are empty.
struct SpectralResult {
  std::vector<double> eigenvalues;
  std::vector<std::vector<double>> eigenvectors;
  double perron_value = 0.0;
  std::vector<double> perron_vector;

  bool has_vectors() const { return !eigenvectors.empty(); }
};

inline double dot(std::span<const double> a, std::span<const double> b) {
  return std::inner_product(a.begin(), a.end(), b.begin(), 0.0);
}

inline double norm2(std::span<const double> a) { return std::sqrt(dot(a, a)); }

inline constexpr double jacobi_relative_tolerance = 1e-12;
inline constexpr int jacobi_max_sweeps = 100;

/// Full eigendecomposition by cyclic Jacobi rotations.
///
/// Sweeps until the off-diagonal Frobenius norm falls below 1e-12 times the
/// initial Frobenius norm. The first three sweeps skip small entries.
inline SpectralResult jacobi_eigen(const SymmetricMatrix &m, bool want_vectors) {
  const std::size_t n = m.order();
  if (n == 0)
    throw NumericalError("jacobi_eigen needs a matrix of order >= 1");
  if (!m.all_finite())
    throw NumericalError("jacobi_eigen: matrix has non-finite entries");

  std::vector<double> a(m.data().begin(), m.data().end());
  std::vector<double> v;
  if (want_vectors) {
    v.assign(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i)
      v[i * n + i] = 1.0;
  }
  auto at = [&](std::size_t i, std::size_t j) -> double & { return a[i * n + j]; };

  const double target = jacobi_relative_tolerance * std::sqrt(m.frobenius_squared());
  bool converged = false;
  for (int sweep = 0; sweep <= jacobi_max_sweeps; ++sweep) {
    double off = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j)
          off += at(i, j) * at(i, j);
    if (std::sqrt(off) <= target) {
      converged = true;
      break;
    }
    if (sweep == jacobi_max_sweeps)
      break;
    const double early_threshold = 0.2 * std::sqrt(off) / static_cast<double>(n * n);

    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = at(p, q);
        if (apq == 0.0)
          continue;
        // Entries negligible against both diagonals are dropped; rotating on
        // them inside a degenerate cluster only reshuffles roundoff.
        const double scaled = 100.0 * std::abs(apq);
        if (sweep > 3 && std::abs(at(p, p)) + scaled == std::abs(at(p, p)) &&
            std::abs(at(q, q)) + scaled == std::abs(at(q, q))) {
          at(p, q) = at(q, p) = 0.0;
          continue;
        }
        if (sweep < 3 && std::abs(apq) <= early_threshold)
          continue;
        const double theta = (at(q, q) - at(p, p)) / (2.0 * apq);
        double t = 0.0;
        if (std::abs(theta) > 1e150)
          t = 0.5 / theta;
        else
          t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        const double tau = s / (1.0 + c);

        at(p, p) -= t * apq;
        at(q, q) += t * apq;
        at(p, q) = at(q, p) = 0.0;
        for (std::size_t r = 0; r < n; ++r) {
          if (r == p || r == q)
            continue;
          const double g = at(r, p);
          const double h = at(r, q);
          at(r, p) = at(p, r) = g - s * (h + g * tau);
          at(r, q) = at(q, r) = h + s * (g - h * tau);
        }
        if (want_vectors) {
          for (std::size_t r = 0; r < n; ++r) {
            const double g = v[r * n + p];
            const double h = v[r * n + q];
            v[r * n + p] = g - s * (h + g * tau);
            v[r * n + q] = h + s * (g - h * tau);
          }
        }
      }
    }
  }
  if (!converged)
    throw NumericalError("jacobi_eigen did not converge within " +
                         std::to_string(jacobi_max_sweeps) + " sweeps");

  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(),
                   [&](std::size_t i, std::size_t j) { return at(i, i) > at(j, j); });

  SpectralResult result;
  result.eigenvalues.reserve(n);
  for (std::size_t i : idx)
    result.eigenvalues.push_back(at(i, i));
  result.perron_value = result.eigenvalues.front();

  if (want_vectors) {
    for (std::size_t i : idx) {
      std::vector<double> col(n);
      for (std::size_t r = 0; r < n; ++r)
        col[r] = v[r * n + i];
      result.eigenvectors.push_back(std::move(col));
    }
    result.perron_vector = result.eigenvectors.front();
    const double sum = std::accumulate(result.perron_vector.begin(), result.perron_vector.end(), 0.0);
    if (sum < 0.0)
      for (double &x : result.perron_vector)
        x = -x;
  }
  return result;
}

struct PowerResult {
  double value = 0.0;
  std::vector<double> vector; // unit norm, entrywise positive
  std::size_t iterations = 0;
  double residual = 0.0; // ||M x - value x||_2
};

/// Dominant eigenpair of a nonnegative irreducible symmetric matrix.
///
/// Iterates on M + cI with c = 1 + max diagonal entry, which makes the
/// dominant eigenvalue simple and strictly largest in modulus even when M
/// has a symmetric spectrum (bipartite adjacency). Stops once the residual
/// ||Mx - rx||_2 of the Rayleigh quotient r drops to `tol`; since M is
/// symmetric, r is then within `tol` of an eigenvalue.
inline PowerResult power_iteration(const SymmetricMatrix &m, double tol = 1e-10,
                                   std::size_t max_iters = 200000) {
  const std::size_t n = m.order();
  if (n == 0)
    throw NumericalError("power_iteration needs a matrix of order >= 1");
  if (!m.all_finite())
    throw NumericalError("power_iteration: matrix has non-finite entries");
  if (!m.nonnegative())
    throw NumericalError("power_iteration requires a nonnegative matrix");

  double max_diag = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    max_diag = std::max(max_diag, m(i, i));
  const double shift = 1.0 + max_diag;

  std::vector<double> x(n, 1.0 / std::sqrt(static_cast<double>(n)));
  double residual = 0.0;
  for (std::size_t it = 0; it < max_iters; ++it) {
    std::vector<double> y = m.multiply(x);
    const double rq = dot(x, y);
    residual = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      residual += (y[i] - rq * x[i]) * (y[i] - rq * x[i]);
    residual = std::sqrt(residual);
    if (residual <= tol)
      return {rq, std::move(x), it, residual};
    for (std::size_t i = 0; i < n; ++i)
      y[i] += shift * x[i];
    const double len = norm2(y);
    for (std::size_t i = 0; i < n; ++i)
      x[i] = y[i] / len;
  }
  throw PowerIterationError("power_iteration did not converge in " + std::to_string(max_iters) +
                                " iterations (residual " + std::to_string(residual) + ")",
                            std::move(x), residual);
}

/// Determinant by LU factorisation with partial pivoting.
inline double determinant(const SymmetricMatrix &m) {
  const std::size_t n = m.order();
  std::vector<double> a(m.data().begin(), m.data().end());
  double det = 1.0;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (std::abs(a[r * n + col]) > std::abs(a[pivot * n + col]))
        pivot = r;
    if (a[pivot * n + col] == 0.0)
      return 0.0;
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j)
        std::swap(a[pivot * n + j], a[col * n + j]);
      det = -det;
    }
    const double d = a[col * n + col];
    det *= d;
    for (std::size_t r = col + 1; r < n; ++r) {
      const double f = a[r * n + col] / d;
      if (f == 0.0)
        continue;
      for (std::size_t j = col; j < n; ++j)
        a[r * n + j] -= f * a[col * n + j];
    }
  }
  return det;
}

/// c3 x^3 + c2 x^2 + c1 x + c0 with c3 != 0.
struct CubicPolynomial {
  double c3 = 1.0;
  double c2 = 0.0;
  double c1 = 0.0;
  double c0 = 0.0;

  double operator()(double x) const { return ((c3 * x + c2) * x + c1) * x + c0; }
  double derivative(double x) const { return (3.0 * c3 * x + 2.0 * c2) * x + c1; }

  double coefficient_scale() const {
    return std::max({std::abs(c3), std::abs(c2), std::abs(c1), std::abs(c0)});
  }
};

inline constexpr double cubic_discriminant_tolerance = 1e-10;

/// Real roots of a cubic known to have three real roots, sorted descending.
///
/// Trigonometric solution of the depressed cubic followed by one Newton step
/// per root. Throws NumericalError if the roots are genuinely complex.
inline std::array<double, 3> solve_cubic_real(const CubicPolynomial &p) {
  if (p.c3 == 0.0 || !std::isfinite(p.c3) || !std::isfinite(p.c2) || !std::isfinite(p.c1) ||
      !std::isfinite(p.c0))
    throw NumericalError("solve_cubic_real needs finite coefficients with c3 != 0");

  const double a = p.c2 / p.c3;
  const double b = p.c1 / p.c3;
  const double c = p.c0 / p.c3;
  const double offset = a / 3.0;
  // x = y - a/3 gives y^3 + P y + Q = 0
  const double P = b - a * a / 3.0;
  const double Q = 2.0 * a * a * a / 27.0 - a * b / 3.0 + c;
  const double scale = std::max({1.0, std::abs(a), std::sqrt(std::abs(b)), std::cbrt(std::abs(c))});
  const double tol = cubic_discriminant_tolerance;

  std::array<double, 3> roots{};
  if (std::abs(P) <= tol * scale * scale) {
    if (std::abs(Q) > tol * scale * scale * scale)
      throw NumericalError("cubic has a complex conjugate root pair");
    roots = {-offset, -offset, -offset};
  } else if (P > 0.0) {
    throw NumericalError("cubic has a complex conjugate root pair");
  } else {
    const double amplitude = 2.0 * std::sqrt(-P / 3.0);
    double arg = (3.0 * Q / (2.0 * P)) * std::sqrt(-3.0 / P);
    if (std::abs(arg) > 1.0 + tol)
      throw NumericalError("cubic has a complex conjugate root pair");
    arg = std::clamp(arg, -1.0, 1.0);
    const double theta = std::acos(arg) / 3.0;
    for (int k = 0; k < 3; ++k)
      roots[k] = amplitude * std::cos(theta - 2.0 * std::numbers::pi * k / 3.0) - offset;
  }

  for (double &r : roots) {
    const double d = p.derivative(r);
    if (d == 0.0)
      continue;
    const double candidate = r - p(r) / d;
    if (std::isfinite(candidate) && std::abs(p(candidate)) <= std::abs(p(r)))
      r = candidate;
  }
  std::sort(roots.begin(), roots.end(), std::greater<>());
  return roots;
}

/// Real roots of a x^2 + b x + c (a != 0), sorted descending. A discriminant
/// that is negative only by rounding is treated as zero.
inline std::array<double, 2> solve_quadratic_real(double a, double b, double c) {
  if (a == 0.0)
    throw NumericalError("solve_quadratic_real needs a != 0");
  double disc = b * b - 4.0 * a * c;
  const double scale = std::max({b * b, std::abs(4.0 * a * c), 1.0});
  if (disc < 0.0) {
    if (disc < -cubic_discriminant_tolerance * scale)
      throw NumericalError("quadratic has complex roots");
    disc = 0.0;
  }
  const double sq = std::sqrt(disc);
  // Avoid cancellation: compute the larger-magnitude root first.
  const double q = -0.5 * (b + (b >= 0.0 ? sq : -sq));
  std::array<double, 2> roots{};
  if (q == 0.0) {
    roots = {0.0, 0.0};
  } else {
    roots = {q / a, c / q};
  }
  if (roots[0] < roots[1])
    std::swap(roots[0], roots[1]);
  return roots;
}

} // namespace cactus
