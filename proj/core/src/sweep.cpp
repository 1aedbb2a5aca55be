#include "hybridwig/sweep.hpp"

#include <cmath>
#include <string>

#include "hybridwig/closed_form.hpp"
#include "hybridwig/dynamics.hpp"
#include "hybridwig/errors.hpp"
#include "hybridwig/fidelity.hpp"
#include "hybridwig/fock_oracle.hpp"
#include "hybridwig/kernels.hpp"
#include "hybridwig/negativity.hpp"

namespace hybridwig {

void validate(const SweepConfig& config) {
  validate(config.scenario);
  validate(config.quad);
  if (config.t_steps < 2) throw DomainError("t_steps must be >= 2");
  if (!(config.t_max_over_pi > 0.0) || !std::isfinite(config.t_max_over_pi)) {
    throw DomainError("t_max_over_pi must be > 0");
  }
}

double grid_time_over_pi(const SweepConfig& config, int i) {
  if (i == config.t_steps - 1) return config.t_max_over_pi;
  return config.t_max_over_pi * i / (config.t_steps - 1);
}

SweepRow sweep_row(const SweepConfig& config, double omega_t_over_pi) {
  const double wt = omega_t_over_pi * kPi;
  const NegativityResult v = negativity_volume_hybrid(config.scenario, wt, config.quad);
  const double crit = critical_value(config.scenario, wt, config.quad);
  SweepRow row;
  row.omega_t_over_pi = omega_t_over_pi;
  row.negativity_volume = v.volume;
  row.negativity_err = v.error_estimate;
  row.critical_value = crit;
  row.fidelity = fidelity_closed_form(config.scenario, wt).value;
  row.witnessed_entangled = entanglement_verdict(v, crit) == Verdict::WitnessedEntangled;
  return row;
}

void oracle_check(const ScenarioParams& scenario, double omega_t) {
  const TruncationSpec spec = auto_truncation(scenario);
  const FockOperator rho = evolve_oracle(initial_density(scenario.family, spec), scenario.lambda, omega_t, spec);
  const cplx a = alpha_t(scenario.lambda, omega_t);
  const PhasePoint points[] = {
      {0.0, 0.0, a},
      {kPi / 2, 0.0, 0.0},
      {kPi / 3, kPi / 4, cplx(0.3, -0.2)},
      {2.0 * kPi / 3, 1.5 * kPi, -a + cplx(0.1, 0.4)},
  };
  for (const PhasePoint& p : points) {
    const double fast = wigner_closed_form(scenario, omega_t, p);
    const double slow = wigner_oracle(rho, p, spec);
    if (std::abs(fast - slow) > kOracleCheckTolerance) {
      throw OracleMismatch("Wigner value at omega_t = " + std::to_string(omega_t) + ": closed form " +
                           std::to_string(fast) + ", oracle " + std::to_string(slow));
    }
  }
  const double f_fast = fidelity_closed_form(scenario, omega_t).value;
  const SigmaPair s = build_sigma_pair(scenario, omega_t, spec);
  const double f_slow = uhlmann_fidelity(s.sigma0, s.sigma1);
  if (std::abs(f_fast - f_slow) > kOracleCheckTolerance) {
    throw OracleMismatch("fidelity at omega_t = " + std::to_string(omega_t) + ": closed form " +
                         std::to_string(f_fast) + ", oracle " + std::to_string(f_slow));
  }
}

std::vector<SweepRow> run_sweep(const SweepConfig& config) {
  validate(config);
  std::vector<SweepRow> rows(static_cast<std::size_t>(config.t_steps));
  SweepConfig inner = config;
  inner.quad.threads = 1;
  parallel_for(rows.size(), config.quad.threads, [&](std::size_t i) {
    const double tau = grid_time_over_pi(config, static_cast<int>(i));
    rows[i] = sweep_row(inner, tau);
    if (config.oracle_checks) oracle_check(config.scenario, tau * kPi);
  });
  return rows;
}

}  // namespace hybridwig
