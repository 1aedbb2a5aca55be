#include "config.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <optional>
#include <sstream>

#include "hybridwig/errors.hpp"

namespace hybridwig::cli {

namespace {

std::string number(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string key_of(const CLI::Error& e, const CLI::App& app) {
  // CLI11 messages start with the option name for conversion errors
  const std::string msg = e.what();
  for (const CLI::Option* opt : app.get_options()) {
    const std::string name = opt->get_lnames().empty() ? std::string() : opt->get_lnames().front();
    if (!name.empty() && msg.find("--" + name) != std::string::npos) return name;
  }
  return {};
}

void require_finite(double v, const char* key) {
  if (!std::isfinite(v)) throw ConfigError(key, "must be finite");
}

}  // namespace

SweepConfig parse_config(const std::vector<std::string>& args) {
  CLI::App app{"Negativity-volume and fidelity sweeps for the qubit-oscillator hybrid", "hybridwig-sweep"};
  app.set_config("--config", "", "key=value file; flags override its values");
  app.allow_config_extras(false);

  std::string scenario;
  double lambda = 0.1;
  std::optional<double> gamma_re, gamma_im, nbar;
  double t_max = 4.0;
  int t_steps = 161;
  QuadratureSpec quad;
  std::string radius = "auto";
  bool oracle = false;
  std::string out;
  std::string format = "csv";

  app.add_option("--scenario", scenario, "coherent | thermal | cat")
      ->check(CLI::IsMember({"coherent", "thermal", "cat"}));
  app.add_option("--lambda", lambda, "coupling g/omega")->capture_default_str();
  app.add_option("--gamma-re", gamma_re, "Re gamma (coherent default 0, cat default 1)");
  app.add_option("--gamma-im", gamma_im, "Im gamma (default 0)");
  app.add_option("--nbar", nbar, "thermal occupation (thermal only, default 3)");
  app.add_option("--t-max-over-pi", t_max, "last time, omega t / pi")->capture_default_str();
  app.add_option("--t-steps", t_steps, "grid points including both ends")->capture_default_str();
  app.add_option("--theta-nodes", quad.theta_nodes, "theta nodes (tensor sphere rule)")->capture_default_str();
  app.add_option("--phi-nodes", quad.phi_nodes, "phi nodes (tensor sphere rule)")->capture_default_str();
  app.add_option("--beta-nodes", quad.beta_nodes_per_axis, "beta nodes per axis")->capture_default_str();
  app.add_option("--beta-radius", radius, "half-width of the beta square, or auto")->capture_default_str();
  app.add_option("--tol", quad.rel_tolerance, "relative quadrature tolerance")->capture_default_str();
  app.add_flag("--oracle-checks", oracle, "cross-check each row against the Fock oracle");
  app.add_option("--out", out, "output file (default stdout)");
  app.add_option("--format", format, "csv | json")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    throw HelpRequested{app.help()};
  } catch (const CLI::CallForAllHelp&) {
    throw HelpRequested{app.help()};
  } catch (const CLI::Error& e) {
    throw ConfigError(key_of(e, app), e.what());
  }

  if (scenario.empty()) throw ConfigError("scenario", "required (coherent, thermal or cat)");

  SweepConfig cfg;
  require_finite(lambda, "lambda");
  cfg.scenario.lambda = lambda;
  if (scenario == "thermal") {
    if (gamma_re) throw ConfigError("gamma-re", "not applicable to --scenario thermal");
    if (gamma_im) throw ConfigError("gamma-im", "not applicable to --scenario thermal");
    const double n = nbar.value_or(3.0);
    require_finite(n, "nbar");
    if (n < 0.0) throw ConfigError("nbar", "must be >= 0");
    cfg.scenario.family = Thermal{n};
  } else {
    if (nbar) throw ConfigError("nbar", "only applies to --scenario thermal");
    const cplx g(gamma_re.value_or(scenario == "cat" ? 1.0 : 0.0), gamma_im.value_or(0.0));
    require_finite(g.real(), "gamma-re");
    require_finite(g.imag(), "gamma-im");
    if (scenario == "coherent") {
      cfg.scenario.family = Coherent{g};
    } else {
      cfg.scenario.family = Cat{g};
    }
  }

  if (!(t_max > 0.0) || !std::isfinite(t_max)) throw ConfigError("t-max-over-pi", "must be > 0");
  if (t_steps < 2) throw ConfigError("t-steps", "must be >= 2");
  cfg.t_max_over_pi = t_max;
  cfg.t_steps = t_steps;

  if (quad.theta_nodes < 8) throw ConfigError("theta-nodes", "must be >= 8");
  if (quad.phi_nodes < 8) throw ConfigError("phi-nodes", "must be >= 8");
  if (quad.beta_nodes_per_axis < 8) throw ConfigError("beta-nodes", "must be >= 8");
  if (!(quad.rel_tolerance > 0.0) || quad.rel_tolerance > 1e-2) throw ConfigError("tol", "must be in (0, 1e-2]");
  if (radius != "auto") {
    double r = 0.0;
    std::size_t used = 0;
    try {
      r = std::stod(radius, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != radius.size() || !(r > 0.0) || !std::isfinite(r)) {
      throw ConfigError("beta-radius", "expected auto or a positive number, got '" + radius + "'");
    }
    quad.beta_radius = r;
  }
  cfg.quad = quad;
  cfg.oracle_checks = oracle;
  cfg.output_path = out;
  cfg.output_format = format == "json" ? OutputFormat::Json : OutputFormat::Csv;

  try {
    validate(cfg);
  } catch (const DomainError& e) {
    throw ConfigError("", e.what());
  }
  return cfg;
}

std::string to_config_text(const SweepConfig& c) {
  std::ostringstream os;
  os << "scenario=" << family_name(c.scenario.family) << '\n';
  os << "lambda=" << number(c.scenario.lambda) << '\n';
  if (const auto* th = std::get_if<Thermal>(&c.scenario.family)) {
    os << "nbar=" << number(th->nbar) << '\n';
  } else {
    const cplx g = std::holds_alternative<Coherent>(c.scenario.family) ? std::get<Coherent>(c.scenario.family).gamma
                                                                       : std::get<Cat>(c.scenario.family).gamma;
    os << "gamma-re=" << number(g.real()) << '\n';
    os << "gamma-im=" << number(g.imag()) << '\n';
  }
  os << "t-max-over-pi=" << number(c.t_max_over_pi) << '\n';
  os << "t-steps=" << c.t_steps << '\n';
  os << "theta-nodes=" << c.quad.theta_nodes << '\n';
  os << "phi-nodes=" << c.quad.phi_nodes << '\n';
  os << "beta-nodes=" << c.quad.beta_nodes_per_axis << '\n';
  os << "beta-radius=" << (c.quad.beta_radius ? number(*c.quad.beta_radius) : std::string("auto")) << '\n';
  os << "tol=" << number(c.quad.rel_tolerance) << '\n';
  os << "oracle-checks=" << (c.oracle_checks ? "true" : "false") << '\n';
  if (!c.output_path.empty()) os << "out=\"" << c.output_path << "\"\n";
  os << "format=" << (c.output_format == OutputFormat::Json ? "json" : "csv") << '\n';
  return os.str();
}

}  // namespace hybridwig::cli
