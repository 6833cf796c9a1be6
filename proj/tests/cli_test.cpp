#include <gtest/gtest.h>

#include <cmath>

#include "cactus/cli.hpp"

using namespace cactus;
using namespace cactus::cli;

namespace {

std::string data(const char *name) { return std::string(CACTUS_TEST_DATA) + "/" + name; }

RunConfig config(Command c) {
  RunConfig cfg;
  cfg.command = c;
  return cfg;
}

} // namespace

TEST(Config, Validation) {
  auto cfg = config(Command::spectrum);
  EXPECT_THROW(cfg.validate(), PreconditionError);
  cfg.input_path = data("k2.txt");
  EXPECT_THROW(cfg.validate(), PreconditionError);
  cfg.alphas = {1.5};
  EXPECT_THROW(cfg.validate(), AlphaDomainError);
  cfg.alphas = {0.5};
  EXPECT_NO_THROW(cfg.validate());

  auto ex = config(Command::extremal);
  ex.alphas = {0.0};
  ex.n = 5;
  EXPECT_THROW(ex.validate(), PreconditionError);
  auto en = config(Command::enumerate);
  EXPECT_THROW(en.validate(), PreconditionError);
}

TEST(Spectrum, Triangle) {
  auto cfg = config(Command::spectrum);
  cfg.input_path = data("triangle.txt");
  cfg.alphas = {0.5};
  const auto r = run(cfg);
  EXPECT_TRUE(r.pass);
  const auto &ev = r.document["cases"][0]["eigenvalues"];
  EXPECT_NEAR(ev[0].get<double>(), 2.0, 1e-12);
  EXPECT_NEAR(ev[1].get<double>(), 0.5, 1e-12);
  EXPECT_NEAR(ev[2].get<double>(), 0.5, 1e-12);
  EXPECT_NE(r.text.find("eigenvalues: 2 0.5 0.5"), std::string::npos);
}

TEST(Spectrum, K2AndBowtie) {
  auto cfg = config(Command::spectrum);
  cfg.input_path = data("k2.txt");
  cfg.alphas = {0.0};
  const auto k2 = run(cfg);
  EXPECT_NEAR(k2.document["cases"][0]["eigenvalues"][1].get<double>(), -1.0, 1e-12);

  cfg.input_path = data("bowtie.txt");
  const auto b = run(cfg);
  EXPECT_NEAR(b.document["cases"][0]["rho"].get<double>(), (1 + std::sqrt(17.0)) / 2, 1e-10);
  EXPECT_NE(b.text.find("2.56155281281"), std::string::npos);
}

TEST(Spectrum, JsonInputAndDisconnectedGraph) {
  auto cfg = config(Command::spectrum);
  cfg.alphas = {0.3, 1.0};
  const Graph split(4, {Edge(0, 1), Edge(2, 3)});
  const auto r = cmd_spectrum(cfg, split);
  EXPECT_TRUE(r.pass);
  EXPECT_TRUE(r.document["cases"][0]["perron_vector"].is_null());
  EXPECT_EQ(r.document["cases"][1]["eigenvalues"].size(), 4u);
}

TEST(Spectrum, MissingFileAndBadInput) {
  auto cfg = config(Command::spectrum);
  cfg.alphas = {0.3};
  cfg.input_path = data("does_not_exist.txt");
  EXPECT_THROW(run(cfg), Error);
  cfg.input_path = data("theta.json");
  EXPECT_NO_THROW(run(cfg));
}

TEST(Extremal, BothModes) {
  auto cfg = config(Command::extremal);
  cfg.n = 5;
  cfg.k = 2;
  cfg.alphas = {0.0};
  const auto r = run(cfg);
  EXPECT_TRUE(r.pass);
  EXPECT_LE(r.document["cases"][0]["max_deviation"].get<double>(), 1e-8);
}

TEST(Extremal, StarAtHalf) {
  auto cfg = config(Command::extremal);
  cfg.n = 10;
  cfg.k = 0;
  cfg.alphas = {0.5};
  cfg.mode = ExtremalMode::closed_form;
  const auto r = run(cfg);
  const double expected = 5.0; // (alpha n + sqrt(alpha^2 n^2 + 0)) / 2
  EXPECT_NEAR(r.document["cases"][0]["rho"].get<double>(), expected, 1e-12);
  EXPECT_FALSE(r.document["cases"][0].contains("numeric"));
}

TEST(Extremal, Infeasible) {
  auto cfg = config(Command::extremal);
  cfg.n = 4;
  cfg.k = 2;
  cfg.alphas = {0.0};
  EXPECT_THROW(run(cfg), PreconditionError);
}

TEST(Verify, Suites) {
  auto cfg = config(Command::verify);
  cfg.suite = VerifySuite::extremal;
  cfg.n_max = 6;
  EXPECT_TRUE(run(cfg).pass);

  auto cp = config(Command::verify);
  cp.suite = VerifySuite::charpoly;
  cp.n = 8;
  cp.k = 2;
  cp.alphas = {0.3};
  cp.trials = 20;
  const auto r = run(cp);
  EXPECT_TRUE(r.pass);
  EXPECT_EQ(r.document["cases"][0]["trials"].size(), 20u);

  auto lm = config(Command::verify);
  lm.suite = VerifySuite::lemmas;
  lm.n_max = 6;
  const auto l = run(lm);
  EXPECT_TRUE(l.pass);
  EXPECT_EQ(l.document["cases"][0]["violations"].size(), 0u);
}

TEST(Verify, CapsAreErrors) {
  auto cfg = config(Command::verify);
  cfg.suite = VerifySuite::extremal;
  cfg.n_max = enumeration_max_order + 1;
  EXPECT_THROW(run(cfg), PreconditionError);
}

TEST(Ascent, PathToStar) {
  auto cfg = config(Command::ascent);
  cfg.input_path = data("p7.txt");
  cfg.alphas = {0.25};
  const auto r = run(cfg);
  EXPECT_TRUE(r.pass);
  const auto &c = r.document["cases"][0];
  EXPECT_TRUE(c["final_is_cc"].get<bool>());
  EXPECT_GT(c["steps"].get<std::size_t>(), 0u);
  EXPECT_EQ(graph_from_json(c["final_graph"]).max_degree(), 6u);
}

TEST(Ascent, FixedPointAndNonCactus) {
  auto cfg = config(Command::ascent);
  cfg.input_path = data("cc_7_2.txt");
  cfg.alphas = {0.5};
  EXPECT_EQ(run(cfg).document["cases"][0]["steps"], 0);
  cfg.input_path = data("theta.txt");
  EXPECT_THROW(run(cfg), PreconditionError);
}

TEST(Enumerate, CountsAndCertificates) {
  auto cfg = config(Command::enumerate);
  cfg.n = 6;
  const auto r = run(cfg);
  std::size_t total = 0;
  for (const auto &c : r.document["cases"])
    total += c["count"].get<std::size_t>();
  EXPECT_EQ(total, 23u);
}

TEST(Reports, JsonRoundTripsAndIsDeterministic) {
  auto cfg = config(Command::verify);
  cfg.suite = VerifySuite::charpoly;
  cfg.n = 7;
  cfg.k = 1;
  cfg.alphas = {0.2, 0.6};
  cfg.seed = 5;
  const auto a = run(cfg);
  const auto b = run(cfg);
  EXPECT_EQ(a.render(OutputFormat::json), b.render(OutputFormat::json));
  const json parsed = json::parse(a.render(OutputFormat::json));
  EXPECT_EQ(parsed, a.document);
  EXPECT_EQ(parsed["command"], "verify");
  EXPECT_TRUE(parsed.contains("config"));
  EXPECT_TRUE(parsed["pass"].get<bool>());
}
