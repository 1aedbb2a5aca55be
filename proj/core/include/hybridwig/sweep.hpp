#pragma once

#include <string>
#include <vector>

#include "hybridwig/phase_space.hpp"
#include "hybridwig/quadrature.hpp"

namespace hybridwig {

enum class OutputFormat { Csv, Json };

struct SweepConfig {
  ScenarioParams scenario;
  double t_max_over_pi = 4.0;
  int t_steps = 161;
  QuadratureSpec quad;
  bool oracle_checks = false;
  std::string output_path;  ///< empty = stdout
  OutputFormat output_format = OutputFormat::Csv;
};

/// DomainError unless t_steps >= 2, t_max_over_pi > 0 and the scenario and
/// quadrature specs are valid.
void validate(const SweepConfig& config);

struct SweepRow {
  double omega_t_over_pi = 0.0;
  double negativity_volume = 0.0;
  double negativity_err = 0.0;
  double critical_value = 0.0;
  double fidelity = 1.0;
  bool witnessed_entangled = false;
};

/// Tolerance of the per-row oracle cross-checks.
inline constexpr double kOracleCheckTolerance = 1e-6;

/// omega t / pi for grid index i of t_steps points on [0, t_max_over_pi].
double grid_time_over_pi(const SweepConfig& config, int i);

/// One row: negativity volume, critical value, closed-form fidelity and verdict.
SweepRow sweep_row(const SweepConfig& config, double omega_t_over_pi);

/// Closed-form Wigner values and the fidelity against the Fock oracle at one
/// time; OracleMismatch beyond kOracleCheckTolerance.
void oracle_check(const ScenarioParams& scenario, double omega_t);

/// Rows on the uniform grid including both endpoints, in grid order.
std::vector<SweepRow> run_sweep(const SweepConfig& config);

}  // namespace hybridwig
