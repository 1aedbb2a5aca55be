#pragma once

#include <span>

#include "hybridwig/dyadic.hpp"
#include "hybridwig/kernels.hpp"
#include "hybridwig/phase_space.hpp"
#include "hybridwig/quadrature.hpp"

namespace hybridwig {

/// Negativity volume (integral of |W| minus one, halved) with the
/// refinement estimate of its quadrature error.
struct NegativityResult {
  double volume = 0.0;
  double abs_integral = 0.0;
  double error_estimate = 0.0;
  int beta_nodes_per_axis = 0;  ///< resolution of the accepted (finer) pass
};

/// Smallest error estimate ever reported: roundoff of the compensated sums.
inline constexpr double kQuadratureErrorFloor = 1e-12;

/// A hybrid Wigner function, described through its qubit marginal M(beta).
class HybridField {
 public:
  virtual ~HybridField() = default;
  virtual QubitMarginal marginal(cplx beta) const = 0;
  /// Half-width of a beta square holding all but ~e^-36 of |W|.
  virtual double auto_beta_radius() const = 0;
  virtual double wigner(const PhasePoint& p) const;
};

/// Oscillator-only Wigner function.
class BosonField {
 public:
  virtual ~BosonField() = default;
  virtual double wigner(cplx beta) const = 0;
  virtual double auto_beta_radius() const = 0;
};

/// Closed-form scenario state at a fixed time.
class ScenarioField final : public HybridField {
 public:
  ScenarioField(ScenarioParams scenario, double omega_t);
  QubitMarginal marginal(cplx beta) const override;
  double auto_beta_radius() const override;
  double wigner(const PhasePoint& p) const override;

 private:
  ScenarioParams scenario_;
  double omega_t_;
};

/// Arbitrary dyadic state (validated on construction).
class DyadicField final : public HybridField {
 public:
  explicit DyadicField(HybridDyadState state);
  QubitMarginal marginal(cplx beta) const override;
  double auto_beta_radius() const override;

 private:
  HybridDyadState state_;
};

class ScenarioBranchField final : public BosonField {
 public:
  ScenarioBranchField(ScenarioParams scenario, int branch, double omega_t);
  double wigner(cplx beta) const override;
  double auto_beta_radius() const override;

 private:
  ScenarioParams scenario_;
  int branch_;
  double omega_t_;
};

class BosonDyadField final : public BosonField {
 public:
  explicit BosonDyadField(BosonDyadState state);
  double wigner(cplx beta) const override;
  double auto_beta_radius() const override;

 private:
  BosonDyadState state_;
};

/// R = max(|gamma|, |gamma| + 2|lambda|) + 2|lambda| + 6 sqrt((2 nbar + 1)/2).
double auto_beta_radius(const ScenarioParams& scenario);

/// Single-resolution integrals over the full hybrid measure.
struct HybridIntegrals {
  double abs_integral = 0.0;
  double signed_integral = 0.0;
};
HybridIntegrals integrate_hybrid(const HybridField& field, const QuadratureSpec& spec);

struct BosonIntegrals {
  double abs_integral = 0.0;
  double signed_integral = 0.0;
};
BosonIntegrals integrate_boson(const BosonField& field, const QuadratureSpec& spec);

/// Negativity volume with node doubling until the volume moves by less than
/// rel_tolerance * integral|W|. QuadratureNonConvergence after
/// spec.max_refinements doublings.
NegativityResult negativity_volume(const HybridField& field, const QuadratureSpec& spec);
NegativityResult negativity_volume(const BosonField& field, const QuadratureSpec& spec);
NegativityResult negativity_volume(const QubitState& qubit, const QuadratureSpec& spec);

NegativityResult negativity_volume_hybrid(const ScenarioParams& scenario, double omega_t,
                                          const QuadratureSpec& spec);

/// Pure qubit sqrt(alpha)|0> + e^{i chi} sqrt(1 - alpha)|1>.
NegativityResult negativity_volume_qubit(double alpha, double chi, const QuadratureSpec& spec);

NegativityResult negativity_volume_boson(const ScenarioParams& scenario, int branch, double omega_t,
                                         const QuadratureSpec& spec);

struct CriticalValue {
  double value = 0.0;
  double error_estimate = 0.0;
};

/// (2/sqrt3) sum_i p_i V_b[rho_b^i] + 1/sqrt3 - 1/2 over the two qubit
/// branches (p_i = 1/2). Gaussian families skip the quadrature.
CriticalValue critical_bound(const ScenarioParams& scenario, double omega_t, const QuadratureSpec& spec);
double critical_value(const ScenarioParams& scenario, double omega_t, const QuadratureSpec& spec);

enum class Verdict { WitnessedEntangled, NotWitnessed };

const char* to_string(Verdict v);

/// WitnessedEntangled iff volume > critical + volume.error_estimate. The
/// criterion is sufficient only, hence "not witnessed" rather than separable.
Verdict entanglement_verdict(const NegativityResult& volume, double critical);

/// Checks the separable-state chain for sum_i p_i rho_q^i (x) rho_b^i:
///   V <= sum_i p_i (2 Vq_i Vb_i + Vq_i + Vb_i) <= (2/sqrt3) sum_i p_i Vb_i + 1/sqrt3 - 1/2,
/// allowing the combined quadrature error of all volumes involved.
bool separable_bound_check(std::span<const double> weights, std::span<const QubitState> qubit_states,
                           std::span<const NegativityResult> boson_branch_volumes,
                           const NegativityResult& hybrid_volume);

/// Right-hand side of the bound for given weights and branch volumes.
double separable_bound(std::span<const double> weights, std::span<const double> boson_volumes);

}  // namespace hybridwig
