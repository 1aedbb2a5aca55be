#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>

#include "config.hpp"
#include "io.hpp"

using namespace hybridwig;
using namespace hybridwig::cli;

namespace {

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("hybridwig_test_" + name)).string();
}

std::string key_of(const std::vector<std::string>& args) {
  try {
    parse_config(args);
  } catch (const ConfigError& e) {
    return e.key();
  }
  return "<none>";
}

int run(const std::string& args) {
  const std::string cmd = std::string(HYBRIDWIG_SWEEP_EXE) + " " + args + " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

void expect_same(const SweepConfig& a, const SweepConfig& b) {
  EXPECT_EQ(a.scenario.lambda, b.scenario.lambda);
  EXPECT_EQ(a.scenario.family.index(), b.scenario.family.index());
  EXPECT_EQ(family_amplitude(a.scenario.family), family_amplitude(b.scenario.family));
  EXPECT_EQ(family_nbar(a.scenario.family), family_nbar(b.scenario.family));
  EXPECT_EQ(a.t_max_over_pi, b.t_max_over_pi);
  EXPECT_EQ(a.t_steps, b.t_steps);
  EXPECT_EQ(a.quad.theta_nodes, b.quad.theta_nodes);
  EXPECT_EQ(a.quad.phi_nodes, b.quad.phi_nodes);
  EXPECT_EQ(a.quad.beta_nodes_per_axis, b.quad.beta_nodes_per_axis);
  EXPECT_EQ(a.quad.beta_radius, b.quad.beta_radius);
  EXPECT_EQ(a.quad.rel_tolerance, b.quad.rel_tolerance);
  EXPECT_EQ(a.oracle_checks, b.oracle_checks);
  EXPECT_EQ(a.output_path, b.output_path);
  EXPECT_EQ(a.output_format, b.output_format);
}

}  // namespace

TEST(ParseConfig, Defaults) {
  const SweepConfig c = parse_config({"--scenario", "cat"});
  EXPECT_EQ(c.scenario.lambda, 0.1);
  EXPECT_EQ(std::get<Cat>(c.scenario.family).gamma, cplx(1.0, 0.0));
  EXPECT_EQ(c.t_max_over_pi, 4.0);
  EXPECT_EQ(c.t_steps, 161);
  EXPECT_FALSE(c.quad.beta_radius.has_value());
  EXPECT_EQ(c.output_format, OutputFormat::Csv);
  EXPECT_EQ(std::get<Thermal>(parse_config({"--scenario", "thermal"}).scenario.family).nbar, 3.0);
  EXPECT_EQ(std::get<Coherent>(parse_config({"--scenario", "coherent"}).scenario.family).gamma, cplx(0.0));
}

TEST(ParseConfig, Errors) {
  EXPECT_EQ(key_of({}), "scenario");
  EXPECT_EQ(key_of({"--scenario", "coherent", "--nbar", "2"}), "nbar");
  EXPECT_EQ(key_of({"--scenario", "thermal", "--gamma-re", "1"}), "gamma-re");
  EXPECT_EQ(key_of({"--scenario", "coherent", "--t-steps", "1"}), "t-steps");
  EXPECT_EQ(key_of({"--scenario", "coherent", "--beta-radius", "-2"}), "beta-radius");
  EXPECT_EQ(key_of({"--scenario", "coherent", "--beta-radius", "big"}), "beta-radius");
  EXPECT_EQ(key_of({"--scenario", "coherent", "--tol", "0.5"}), "tol");
  EXPECT_EQ(key_of({"--scenario", "coherent", "--lambda", "abc"}), "lambda");
  EXPECT_EQ(key_of({"--scenario", "coherent", "--theta-nodes", "3"}), "theta-nodes");
  EXPECT_EQ(key_of({"--scenario", "coherent", "--t-max-over-pi", "0"}), "t-max-over-pi");
  EXPECT_EQ(key_of({"--scenario", "sphere"}), "scenario");
  EXPECT_EQ(key_of({"--scenario", "cat", "--format", "xml"}), "format");
  EXPECT_THROW(parse_config({"--help"}), HelpRequested);
}

TEST(ParseConfig, RoundTripsThroughConfigFile) {
  const SweepConfig c = parse_config({"--scenario", "cat", "--lambda", "0.123456789012345", "--gamma-re", "0.7",
                                      "--gamma-im", "-0.3", "--t-max-over-pi", "2.5", "--t-steps", "33",
                                      "--theta-nodes", "24", "--phi-nodes", "40", "--beta-nodes", "64",
                                      "--beta-radius", "5.25", "--tol", "3e-5", "--oracle-checks", "--out",
                                      "rows.json", "--format", "json"});
  const std::string path = temp_path("roundtrip.toml");
  std::ofstream(path) << to_config_text(c);
  expect_same(c, parse_config({"--config", path}));

  const SweepConfig t = parse_config({"--scenario", "thermal", "--nbar", "0.1", "--lambda", "1e-7"});
  std::ofstream(path) << to_config_text(t);
  expect_same(t, parse_config({"--config", path}));
  std::remove(path.c_str());
}

TEST(ParseConfig, FlagsOverrideFile) {
  const std::string path = temp_path("override.toml");
  std::ofstream(path) << "scenario=coherent\nlambda=0.2\nt-steps=11\n";
  const SweepConfig c = parse_config({"--config", path, "--lambda", "0.3"});
  EXPECT_EQ(c.scenario.lambda, 0.3);
  EXPECT_EQ(c.t_steps, 11);
  std::ofstream(path) << "scenario=coherent\nnbar=2\n";
  EXPECT_EQ(key_of({"--config", path}), "nbar");
  std::ofstream(path) << "scenario=coherent\nunknown-key=2\n";
  EXPECT_THROW(parse_config({"--config", path}), ConfigError);
  std::remove(path.c_str());
}

TEST(Output, CsvRoundTripExact) {
  std::mt19937_64 rng(81);
  std::uniform_real_distribution<double> u(-1, 1);
  std::vector<SweepRow> rows;
  for (int k = 0; k < 50; ++k) {
    rows.push_back({u(rng), u(rng) * 1e-3, std::abs(u(rng)) * 1e-9, u(rng), 1.0 - std::abs(u(rng)) * 1e-7, k % 3 == 0});
  }
  rows.push_back({0.0, 0.1, 1e-300, 5e-324, 1.0, false});
  std::stringstream ss;
  write_csv(ss, rows);
  std::string header;
  std::getline(std::stringstream(ss.str()), header);
  EXPECT_EQ(header, "omega_t_over_pi,negativity_volume,negativity_err,critical_value,fidelity,witnessed_entangled");
  const auto back = read_csv(ss);
  ASSERT_EQ(back.size(), rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    EXPECT_EQ(back[i].omega_t_over_pi, rows[i].omega_t_over_pi);
    EXPECT_EQ(back[i].negativity_volume, rows[i].negativity_volume);
    EXPECT_EQ(back[i].negativity_err, rows[i].negativity_err);
    EXPECT_EQ(back[i].critical_value, rows[i].critical_value);
    EXPECT_EQ(back[i].fidelity, rows[i].fidelity);
    EXPECT_EQ(back[i].witnessed_entangled, rows[i].witnessed_entangled);
  }
}

TEST(Output, JsonRoundTripExact) {
  const std::vector<SweepRow> rows = {{0.0, 0.0773502691896258, 1e-12, 0.0773502691896258, 1.0, false},
                                      {0.025, 0.07738586, 3.3e-13, 0.0773502691896258, 0.9999876, true}};
  std::stringstream ss;
  write_json(ss, rows);
  const auto back = read_json(ss);
  ASSERT_EQ(back.size(), 2u);
  EXPECT_EQ(back[1].negativity_volume, rows[1].negativity_volume);
  EXPECT_EQ(back[1].fidelity, rows[1].fidelity);
  EXPECT_TRUE(back[1].witnessed_entangled);
}

TEST(Output, SchemaMismatchRejected) {
  std::stringstream bad_header("time,volume\n0,1\n");
  EXPECT_THROW(read_csv(bad_header), std::runtime_error);
  std::stringstream bad_bool(std::string(kCsvHeader) + "\n0,0,0,0,1,yes\n");
  EXPECT_THROW(read_csv(bad_bool), std::runtime_error);
  std::stringstream short_row(std::string(kCsvHeader) + "\n0,0,0\n");
  EXPECT_THROW(read_csv(short_row), std::runtime_error);
}

TEST(Executable, ExitCodes) {
  const std::string out = temp_path("rows.csv");
  EXPECT_EQ(run("--scenario coherent --t-steps 3 --out " + out), 0);
  std::ifstream in(out);
  EXPECT_EQ(read_csv(in).size(), 3u);
  std::remove(out.c_str());
  EXPECT_EQ(run(""), 2);
  EXPECT_EQ(run("--scenario coherent --nbar 2"), 2);
  EXPECT_EQ(run("--scenario cat --t-steps 2 --beta-nodes 8 --tol 1e-12"), 3);
}
