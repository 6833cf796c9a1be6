#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "cactus/alpha_spectral.hpp"
#include "cactus/canonical.hpp"
#include "cactus/enumeration.hpp"
#include "cactus/extremal.hpp"
#include "cactus/serialize.hpp"
#include "cactus/transforms.hpp"
#include "cactus/verification.hpp"

namespace cactus::cli {

enum class Command { spectrum, extremal, verify, ascent, enumerate };
enum class OutputFormat { text, json };
enum class ExtremalMode { closed_form, numeric, both };
enum class VerifySuite { extremal, lemmas, charpoly, all };

inline std::string_view to_string(Command c) {
  switch (c) {
  case Command::spectrum:
    return "spectrum";
  case Command::extremal:
    return "extremal";
  case Command::verify:
    return "verify";
  case Command::ascent:
    return "ascent";
  case Command::enumerate:
    return "enumerate";
  }
  return "unknown";
}

inline std::string_view to_string(ExtremalMode m) {
  switch (m) {
  case ExtremalMode::closed_form:
    return "closed-form";
  case ExtremalMode::numeric:
    return "numeric";
  case ExtremalMode::both:
    return "both";
  }
  return "unknown";
}

inline std::string_view to_string(VerifySuite s) {
  switch (s) {
  case VerifySuite::extremal:
    return "extremal";
  case VerifySuite::lemmas:
    return "lemmas";
  case VerifySuite::charpoly:
    return "charpoly";
  case VerifySuite::all:
    return "all";
  }
  return "unknown";
}

inline const std::vector<double> default_alphas{0.0, 0.25, 0.5, 0.75};

struct RunConfig {
  Command command = Command::spectrum;
  std::optional<std::string> input_path;
  std::vector<double> alphas;
  std::optional<std::size_t> n;
  std::optional<std::size_t> k;
  std::optional<std::size_t> n_max;
  std::optional<std::size_t> trials;
  std::uint64_t seed = 0;
  std::optional<std::string> output;
  OutputFormat format = OutputFormat::text;
  ExtremalMode mode = ExtremalMode::both;
  VerifySuite suite = VerifySuite::all;

  /// Throws PreconditionError when a field required by the command is
  /// missing, AlphaDomainError for alpha outside [0,1].
  void validate() const {
    for (double a : alphas)
      Alpha{a};
    switch (command) {
    case Command::spectrum:
    case Command::ascent:
      if (!input_path)
        throw PreconditionError(std::string(to_string(command)) + " needs a graph file");
      if (alphas.empty())
        throw PreconditionError(std::string(to_string(command)) + " needs --alpha");
      break;
    case Command::extremal:
      if (!n || !k)
        throw PreconditionError("extremal needs --n and --k");
      if (alphas.empty())
        throw PreconditionError("extremal needs --alpha");
      break;
    case Command::enumerate:
      if (!n)
        throw PreconditionError("enumerate needs --n");
      break;
    case Command::verify:
      if (suite == VerifySuite::charpoly && n.has_value() != k.has_value())
        throw PreconditionError("verify charpoly needs both --n and --k, or neither");
      break;
    }
  }

  json to_json() const {
    json j = {{"alpha", alphas}, {"seed", seed}, {"format", format == OutputFormat::json ? "json" : "text"}};
    if (input_path)
      j["input"] = *input_path;
    if (n)
      j["n"] = *n;
    if (k)
      j["k"] = *k;
    if (n_max)
      j["n_max"] = *n_max;
    if (trials)
      j["trials"] = *trials;
    if (command == Command::extremal)
      j["mode"] = to_string(mode);
    if (command == Command::verify)
      j["suite"] = to_string(suite);
    return j;
  }
};

/// A command's outcome: the JSON document {"command", "config", "cases",
/// "pass"} plus its human-readable rendering.
struct Report {
  json document;
  std::string text;
  bool pass = true;

  const std::string &render(OutputFormat f) const {
    if (f == OutputFormat::json) {
      if (json_text.empty())
        json_text = document.dump(2) + "\n";
      return json_text;
    }
    return text;
  }

private:
  mutable std::string json_text;
};

namespace detail {

class TextOut {
public:
  TextOut() { out_ << std::setprecision(12); }

  template <typename T> TextOut &operator<<(const T &v) {
    out_ << v;
    return *this;
  }

  TextOut &values(std::span<const double> xs) {
    for (std::size_t i = 0; i < xs.size(); ++i)
      out_ << (i ? " " : "") << xs[i];
    return *this;
  }

  std::string str() const { return out_.str(); }

private:
  std::ostringstream out_;
};

inline Report make_report(const RunConfig &cfg, json cases, bool pass, std::string text) {
  Report r;
  r.document = {{"command", to_string(cfg.command)}, {"config", cfg.to_json()}, {"cases", std::move(cases)}, {"pass", pass}};
  r.text = std::move(text);
  r.pass = pass;
  return r;
}

inline std::string read_file(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw Error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

} // namespace detail

inline Graph load_graph(const std::string &path) { return read_graph(detail::read_file(path)); }

/// Eigenvalues, spectral radius and Perron vector of A_alpha(g), with trace
/// and Frobenius identity residuals as self-checks.
inline Report cmd_spectrum(const RunConfig &cfg, const Graph &g) {
  json cases = json::array();
  detail::TextOut text;
  bool pass = true;
  const double m = static_cast<double>(g.size());
  double degree_squares = 0.0;
  for (Vertex v = 0; v < g.order(); ++v)
    degree_squares += static_cast<double>(g.degree(v) * g.degree(v));
  const bool connected = is_connected(g);

  for (double a : cfg.alphas) {
    const Alpha alpha(a);
    const SpectralResult s = full_spectrum(g, alpha);
    double sum = 0.0;
    double sum_sq = 0.0;
    for (double l : s.eigenvalues) {
      sum += l;
      sum_sq += l * l;
    }
    const double trace_residual = std::abs(sum - 2.0 * m * a);
    const double frobenius_residual =
        std::abs(sum_sq - (a * a * degree_squares + 2.0 * m * (1.0 - a) * (1.0 - a)));
    const double scale = static_cast<double>(g.order()) * std::max(1.0, alpha_matrix(g, alpha).inf_norm());
    bool ok = trace_residual <= 1e-9 * scale && frobenius_residual <= 1e-9 * scale * scale;

    json c = {{"alpha", a},
              {"eigenvalues", s.eigenvalues},
              {"trace_residual", trace_residual},
              {"frobenius_residual", frobenius_residual}};
    text << "alpha = " << a << "\n  eigenvalues: ";
    text.values(s.eigenvalues) << "\n";
    if (connected && alpha.below_one()) {
      const PerronPair perron = spectral_radius(g, alpha);
      const double residual = eigen_residual(g, alpha, perron.rho, perron.vector);
      ok = ok && residual <= 1e-9;
      c["rho"] = perron.rho;
      c["perron_vector"] = perron.vector;
      c["eigen_residual"] = residual;
      text << "  rho: " << perron.rho << "\n  perron vector: ";
      text.values(perron.vector) << "\n  eigen residual: " << residual << "\n";
    } else {
      c["rho"] = s.perron_value;
      c["perron_vector"] = nullptr;
      c["perron_note"] = connected ? "Perron vector requires alpha < 1" : "graph is disconnected";
      text << "  rho: " << s.perron_value << " (no Perron vector: "
           << (connected ? "alpha = 1" : "graph is disconnected") << ")\n";
    }
    text << "  trace residual: " << trace_residual << ", frobenius residual: " << frobenius_residual
         << "\n";
    c["pass"] = ok;
    pass = pass && ok;
    cases.push_back(std::move(c));
  }
  return detail::make_report(cfg, std::move(cases), pass, text.str());
}

inline Report cmd_spectrum(const RunConfig &cfg) {
  cfg.validate();
  return cmd_spectrum(cfg, load_graph(*cfg.input_path));
}

/// Closed-form spectrum of C^c(n, k), optionally checked against the dense
/// eigensolver.
inline Report cmd_extremal(const RunConfig &cfg) {
  cfg.validate();
  const ExtremalParams p = ExtremalParams::make(*cfg.n, *cfg.k);
  const Graph g = build_cc(p.n, p.k);
  json cases = json::array();
  detail::TextOut text;
  bool pass = true;
  text << "C^c(n=" << p.n << ", k=" << p.k << ", t=" << p.t << ")\n";
  for (double a : cfg.alphas) {
    const Alpha alpha(a);
    json c = {{"alpha", a}, {"n", p.n}, {"k", p.k}, {"t", p.t}};
    text << "alpha = " << a << "\n";
    std::vector<double> closed;
    if (cfg.mode != ExtremalMode::numeric) {
      const ExtremalSpectrum s = cc_spectrum(p, alpha);
      closed = s.sorted_values();
      c["spectrum"] = to_json(s);
      c["rho"] = s.largest().value;
      text << "  closed form:";
      for (const auto &e : s.entries)
        text << " " << e.value + 0.0 << " x" << e.multiplicity << " (" << to_string(e.provenance) << ")";
      text << "\n  rho: " << s.largest().value << "\n";
    }
    if (cfg.mode != ExtremalMode::closed_form) {
      const auto numeric = full_spectrum(g, alpha).eigenvalues;
      c["numeric"] = numeric;
      text << "  numeric: ";
      text.values(numeric) << "\n";
      if (cfg.mode == ExtremalMode::both) {
        double dev = 0.0;
        for (std::size_t i = 0; i < numeric.size(); ++i)
          dev = std::max(dev, std::abs(numeric[i] - closed[i]));
        const bool ok = dev <= 1e-8;
        c["max_deviation"] = dev;
        c["pass"] = ok;
        pass = pass && ok;
        text << "  max deviation: " << dev << (ok ? " (ok)" : " (FAIL)") << "\n";
      }
    }
    cases.push_back(std::move(c));
  }
  return detail::make_report(cfg, std::move(cases), pass, text.str());
}

/// Runs the extremality, lemma and/or determinant-factorisation suites.
inline Report cmd_verify(const RunConfig &cfg) {
  cfg.validate();
  json cases = json::array();
  detail::TextOut text;
  bool pass = true;
  const auto &alphas = cfg.alphas.empty() ? default_alphas : cfg.alphas;
  const bool all = cfg.suite == VerifySuite::all;

  if (all || cfg.suite == VerifySuite::extremal) {
    const std::size_t n_max = cfg.n_max.value_or(7);
    if (n_max > enumeration_max_order)
      throw PreconditionError("verify extremal supports --n-max <= " + std::to_string(enumeration_max_order));
    std::size_t failures = 0;
    std::size_t ties = 0;
    std::size_t count = 0;
    for (std::size_t n = 1; n <= n_max; ++n) {
      for (std::size_t k = 0; 2 * k + 1 <= n; ++k) {
        const auto classes = enumerate_cacti(n, k);
        for (double a : alphas) {
          const auto r = verify_extremal(classes, n, k, Alpha(a));
          json c = to_json(r);
          c["suite"] = "extremal";
          cases.push_back(std::move(c));
          ++count;
          if (!r.is_cc_max) {
            ++failures;
            text << "  extremal FAIL n=" << n << " k=" << k << " alpha=" << a << "\n";
          } else if (!r.is_cc_unique_max) {
            ++ties;
            text << "  extremal tie n=" << n << " k=" << k << " alpha=" << a << "\n";
          }
        }
      }
    }
    pass = pass && failures == 0;
    text << "extremal: " << count << " cases, " << failures << " failures, " << ties << " ties\n";
  }

  if (all || cfg.suite == VerifySuite::lemmas) {
    const std::size_t n_max = cfg.n_max.value_or(6);
    const auto r = verify_lemma_sweep(n_max, alphas, cfg.seed);
    json c = to_json(r);
    c["suite"] = "lemmas";
    cases.push_back(std::move(c));
    pass = pass && r.pass();
    text << "lemmas: " << r.graphs << " graphs, " << r.total_checks() << " checks, "
         << r.violations.size() << " violations\n";
    for (const auto &v : r.violations)
      text << "  " << v.kind << " at " << v.site << " alpha=" << v.alpha << ": " << v.message << "\n";
  }

  if (all || cfg.suite == VerifySuite::charpoly) {
    const std::size_t trials = cfg.trials.value_or(20);
    std::vector<ExtremalParams> grid;
    if (cfg.n) {
      grid.push_back(ExtremalParams::make(*cfg.n, *cfg.k));
    } else {
      for (std::size_t n = 2; n <= 12; ++n)
        for (std::size_t k = 0; 2 * k + 1 <= n; ++k)
          grid.push_back(ExtremalParams::make(n, k));
    }
    std::size_t failures = 0;
    for (const auto &p : grid) {
      for (double a : alphas) {
        const auto r = verify_charpoly_identity(p, Alpha(a), trials, cfg.seed);
        json c = to_json(r);
        c["suite"] = "charpoly";
        cases.push_back(std::move(c));
        if (!r.pass) {
          ++failures;
          text << "  charpoly FAIL n=" << p.n << " k=" << p.k << " alpha=" << a
               << " max rel error " << r.max_relative_error << "\n";
        }
      }
    }
    pass = pass && failures == 0;
    text << "charpoly: " << grid.size() * alphas.size() << " cases, " << failures << " failures\n";
  }

  text << (pass ? "PASS" : "FAIL") << "\n";
  return detail::make_report(cfg, std::move(cases), pass, text.str());
}

/// Greedy ascent trace from g to C^c(n, k) at the first requested alpha.
inline Report cmd_ascent(const RunConfig &cfg, const Graph &g) {
  const Alpha alpha(cfg.alphas.at(0));
  const CactusProfile profile = cactus_profile(g);
  if (!profile.is_cactus)
    throw PreconditionError("input graph is not a connected cactus");
  const AscentResult r = greedy_ascent(g, alpha);
  bool reached = has_cc_shape(r.graph);
  if (g.order() <= canonical_max_order)
    reached = reached && canonical_form(r.graph) == canonical_form(build_cc(g.order(), profile.k));
  bool increasing = true;
  for (const auto &s : r.steps)
    increasing = increasing && s.rho_after > s.rho_before;

  json c = {{"alpha", alpha.value()},
            {"n", g.order()},
            {"k", profile.k},
            {"steps", r.steps.size()},
            {"trace", to_json(r.steps)},
            {"final_graph", to_json(r.graph)},
            {"final_is_cc", reached},
            {"rho_increasing", increasing}};
  const bool pass = reached && increasing;
  c["pass"] = pass;
  detail::TextOut text;
  text << "alpha = " << alpha.value() << ", n = " << g.order() << ", k = " << profile.k << "\n";
  for (std::size_t i = 0; i < r.steps.size(); ++i) {
    const auto &s = r.steps[i];
    text << "  " << i + 1 << ". " << to_string(s.kind) << ": rho " << s.rho_before << " -> "
         << s.rho_after << " (moved " << s.removed.size() << " edge" << (s.removed.size() == 1 ? "" : "s")
         << " from " << s.witness.v << " to " << s.witness.w << ")\n";
  }
  text << "final graph" << (reached ? " is C^c" : " is NOT C^c") << ":\n" << to_edge_list(r.graph);
  json cases = json::array({c});
  return detail::make_report(cfg, std::move(cases), pass, text.str());
}

inline Report cmd_ascent(const RunConfig &cfg) {
  cfg.validate();
  return cmd_ascent(cfg, load_graph(*cfg.input_path));
}

/// Lists one representative per isomorphism class of cacti.
inline Report cmd_enumerate(const RunConfig &cfg) {
  cfg.validate();
  const std::size_t n = *cfg.n;
  std::vector<std::size_t> ks;
  if (cfg.k)
    ks.push_back(*cfg.k);
  else
    for (std::size_t k = 0; 2 * k + 1 <= n; ++k)
      ks.push_back(k);
  json cases = json::array();
  detail::TextOut text;
  for (std::size_t k : ks) {
    const auto classes = enumerate_cacti(n, k);
    json graphs = json::array();
    text << "n = " << n << ", k = " << k << ": " << classes.size() << " classes\n";
    for (const Graph &g : classes) {
      json gj = to_json(g);
      gj["certificate"] = canonical_form(g).hex();
      graphs.push_back(std::move(gj));
      text << to_edge_list(g) << "\n";
    }
    cases.push_back({{"n", n}, {"k", k}, {"count", classes.size()}, {"graphs", graphs}});
  }
  return detail::make_report(cfg, std::move(cases), true, text.str());
}

inline Report run(const RunConfig &cfg) {
  switch (cfg.command) {
  case Command::spectrum:
    return cmd_spectrum(cfg);
  case Command::extremal:
    return cmd_extremal(cfg);
  case Command::verify:
    return cmd_verify(cfg);
  case Command::ascent:
    return cmd_ascent(cfg);
  case Command::enumerate:
    return cmd_enumerate(cfg);
  }
  throw Error("unknown command");
}

} // namespace cactus::cli
