#pragma once

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "cactus/alpha_spectral.hpp"
#include "cactus/canonical.hpp"
#include "cactus/enumeration.hpp"
#include "cactus/extremal.hpp"
#include "cactus/profile.hpp"
#include "cactus/transforms.hpp"

namespace cactus {

/// Radii closer than this are reported as a tie.
inline constexpr double radius_tie_tolerance = 1e-9;

struct ExtremalityReport {
  std::size_t n = 0;
  std::size_t k = 0;
  double alpha = 0.0;
  std::size_t num_cacti = 0;
  double max_rho = 0.0;
  double cc_rho = 0.0;
  CanonicalForm argmax_certificate;
  CanonicalForm cc_certificate;
  bool is_cc_max = false;        // no class beats C^c beyond the tie tolerance
  bool is_cc_unique_max = false; // and none ties with it
  std::optional<double> gap;     // C^c's radius minus the runner-up; empty if C^c is alone
  double runtime_seconds = 0.0;
  std::optional<std::string> counterexample; // edge list of a class beating C^c
};

/// Checks rho(C) <= rho(C^c(n, k)) over the given cactus classes.
inline ExtremalityReport verify_extremal(std::span<const Graph> classes, std::size_t n,
                                         std::size_t k, Alpha alpha) {
  require_alpha_below_one(alpha, "verify_extremal");
  const auto start = std::chrono::steady_clock::now();
  ExtremalityReport r;
  r.n = n;
  r.k = k;
  r.alpha = alpha.value();
  r.num_cacti = classes.size();
  r.cc_certificate = canonical_form(build_cc(n, k));

  bool cc_seen = false;
  double runner_up = -std::numeric_limits<double>::infinity();
  const Graph *worst_offender = nullptr;
  r.max_rho = -std::numeric_limits<double>::infinity();
  std::vector<double> rhos;
  for (const Graph &g : classes) {
    const double rho = full_spectrum(g, alpha).perron_value;
    rhos.push_back(rho);
    const CanonicalForm cf = canonical_form(g);
    if (rho > r.max_rho) {
      r.max_rho = rho;
      r.argmax_certificate = cf;
    }
    if (cf == r.cc_certificate) {
      cc_seen = true;
      r.cc_rho = rho;
    } else {
      if (rho > runner_up) {
        runner_up = rho;
        worst_offender = &g;
      }
    }
  }
  if (!cc_seen)
    throw Error("C^c(" + std::to_string(n) + "," + std::to_string(k) +
                ") is missing from the supplied classes");

  r.is_cc_max = runner_up <= r.cc_rho + radius_tie_tolerance;
  if (classes.size() > 1) {
    r.gap = r.cc_rho - runner_up;
    r.is_cc_unique_max = *r.gap > radius_tie_tolerance;
  } else {
    r.is_cc_unique_max = true;
  }
  if (!r.is_cc_max && worst_offender != nullptr)
    r.counterexample = to_edge_list(*worst_offender);
  r.runtime_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

inline ExtremalityReport verify_extremal(std::size_t n, std::size_t k, Alpha alpha) {
  const auto classes = enumerate_cacti(n, k);
  return verify_extremal(classes, n, k, alpha);
}

struct SweepViolation {
  std::string kind;
  std::string graph; // edge-list text
  std::string site;
  double alpha = 0.0;
  double rho_before = 0.0;
  double rho_after = 0.0;
  std::string message;
};

struct LemmaSweepReport {
  std::size_t n_max = 0;
  std::vector<double> alphas;
  std::size_t graphs = 0;
  std::map<std::string, std::size_t> checks; // per rewrite kind, plus "perron_monotonicity"
  std::vector<SweepViolation> violations;

  std::size_t total_checks() const {
    std::size_t total = 0;
    for (const auto &[kind, count] : checks)
      total += count;
    return total;
  }
  bool pass() const { return violations.empty(); }
};

namespace detail {

inline std::string describe(std::span<const Vertex> vs) {
  std::string s = "[";
  for (std::size_t i = 0; i < vs.size(); ++i)
    s += (i ? "," : "") + std::to_string(vs[i]);
  return s + "]";
}

template <typename Rewrite>
void sweep_site(LemmaSweepReport &report, const Graph &g, double alpha, std::string kind,
                std::string site, Rewrite &&rewrite) {
  ++report.checks[kind];
  try {
    rewrite();
  } catch (const LemmaViolation &e) {
    report.violations.push_back(
        {kind, to_edge_list(g), std::move(site), alpha, e.rho_before(), e.rho_after(), e.what()});
  } catch (const Error &e) {
    report.violations.push_back({kind, to_edge_list(g), std::move(site), alpha, 0.0, 0.0, e.what()});
  }
}

inline void sweep_graph(LemmaSweepReport &report, const Graph &g, Alpha alpha) {
  const CactusProfile p = cactus_profile(g);
  const PerronPair perron = spectral_radius(g, alpha);
  const auto &x = perron.vector;
  const double a = alpha.value();

  for (const Block *b : p.cycle_blocks()) {
    if (b->vertices.size() < 4)
      continue;
    const auto cycle = cycle_order(*b);
    sweep_site(report, g, a, "shrink_cycle", describe(cycle),
               [&] { shrink_cycle(g, cycle, alpha); });
  }

  if (perron.rho > 2.0 + radius_two_margin) {
    for (const PendantPath &pp : p.pendant_paths) {
      std::vector<Vertex> chain{pp.anchor};
      chain.insert(chain.end(), pp.path.begin(), pp.path.end());
      ++report.checks["perron_monotonicity"];
      for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
        if (!(x[chain[i]] > x[chain[i + 1]])) {
          report.violations.push_back({"perron_monotonicity", to_edge_list(g), describe(chain), a,
                                       perron.rho, perron.rho,
                                       "Perron entries do not decrease along the pendant path"});
          break;
        }
      }
      if (pp.length() >= 2)
        sweep_site(report, g, a, "contract_pendant_path", describe(pp.path),
                   [&] { contract_pendant_path(g, pp.path, alpha); });
    }
  }

  for (const Edge &e : p.proper_cut_edges) {
    const Vertex ends[] = {e.u, e.v};
    sweep_site(report, g, a, "merge_cut_edge", describe(ends), [&] { merge_cut_edge(g, e, alpha); });
  }

  for (std::size_t i = 0; i < p.cut_vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < p.cut_vertices.size(); ++j) {
      const Vertex u = p.cut_vertices[i];
      const Vertex v = p.cut_vertices[j];
      if (p.is_cut_edge(Edge(u, v)))
        continue;
      const Vertex pair[] = {u, v};
      sweep_site(report, g, a, "merge_cut_vertices", describe(pair),
                 [&] { merge_cut_vertices(g, u, v, alpha); });
    }
  }

  // Rotate the whole eligible neighbourhood of v onto w whenever x_w >= x_v
  // and the result stays a cactus.
  for (Vertex v = 0; v < g.order(); ++v) {
    for (Vertex w = 0; w < g.order(); ++w) {
      if (v == w || x[w] < x[v] - perron_tie_tolerance)
        continue;
      std::vector<Vertex> S;
      std::vector<Edge> removed;
      std::vector<Edge> added;
      for (Vertex s : g.neighbors(v)) {
        if (s != w && !g.has_edge(s, w)) {
          S.push_back(s);
          removed.emplace_back(s, v);
          added.emplace_back(s, w);
        }
      }
      if (S.empty())
        continue;
      const CactusProfile hp = cactus_profile(apply_edge_rewrite(g, removed, added));
      if (!hp.is_cactus || hp.k != p.k)
        continue;
      const Vertex pair[] = {v, w};
      sweep_site(report, g, a, "rotate", describe(pair) + " S=" + describe(S),
                 [&] { rotate_edges(g, v, w, S, alpha); });
    }
  }
}

} // namespace detail

/// Applies every applicable rewrite at every site of every cactus class with
/// n <= n_max, for each alpha, and records any failure to increase rho.
/// `random_alphas` extra values are drawn from [0, 0.95) with `seed`.
inline LemmaSweepReport verify_lemma_sweep(std::size_t n_max, std::span<const double> alphas,
                                           std::uint64_t seed = 0, std::size_t random_alphas = 0) {
  if (n_max > enumeration_max_order)
    throw PreconditionError("verify_lemma_sweep supports n_max <= " +
                            std::to_string(enumeration_max_order));
  LemmaSweepReport report;
  report.n_max = n_max;
  report.alphas.assign(alphas.begin(), alphas.end());
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> jitter(0.0, strict_alpha_limit);
  for (std::size_t i = 0; i < random_alphas; ++i)
    report.alphas.push_back(jitter(rng));

  std::vector<Alpha> checked;
  for (double a : report.alphas) {
    Alpha alpha(a);
    require_alpha_below_one(alpha, "verify_lemma_sweep");
    checked.push_back(alpha);
  }

  for (std::size_t n = 1; n <= n_max; ++n) {
    for (std::size_t k = 0; 2 * k + 1 <= n; ++k) {
      for (const Graph &g : enumerate_cacti(n, k)) {
        ++report.graphs;
        for (Alpha alpha : checked)
          detail::sweep_graph(report, g, alpha);
      }
    }
  }
  return report;
}

} // namespace cactus
