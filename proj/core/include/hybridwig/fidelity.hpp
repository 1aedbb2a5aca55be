#pragma once

#include "hybridwig/fock_oracle.hpp"
#include "hybridwig/phase_space.hpp"

namespace hybridwig {

/// Threshold on 1 - F above which the fidelity criterion reports entanglement.
inline constexpr double kFidelityTolerance = 1e-6;

/// Largest trace leakage tolerated when building sigma0, sigma1.
inline constexpr double kSigmaLeakage = 1e-8;

struct FidelityResult {
  double value = 1.0;      ///< root fidelity, in [0, 1]
  bool entangled = false;  ///< 1 - value > kFidelityTolerance
};

/// Closed-form fidelity of the conditionally evolved oscillator states.
///   coherent: exp(-2|alpha_t|^2)
///   thermal:  exp(-2|alpha_t|^2 / (2 nbar + 1))
///   cat:      |e^{-2|alpha-g|^2} + e^{-2|alpha+g|^2} + 2 e^{-2|alpha|^2} cos(4 Im alpha^* gamma^*)| / N
/// with g = e^{-i omega t} gamma. DomainError if omega_t < 0.
FidelityResult fidelity_closed_form(const ScenarioParams& scenario, double omega_t);

struct SigmaPair {
  FockOperator sigma0;  ///< rho_b(0) evolved with omega a^dag a + g (a + a^dag)
  FockOperator sigma1;  ///< ... with omega a^dag a - g (a + a^dag)
};

/// CutoffInsufficient if either state puts more than kSigmaLeakage near the cutoff.
SigmaPair build_sigma_pair(const ScenarioParams& scenario, double omega_t, const TruncationSpec& spec);
SigmaPair build_sigma_pair(const ScenarioParams& scenario, double omega_t);

/// Tr sqrt(sqrt(sigma) rho sqrt(sigma)), evaluated as the trace norm of
/// sqrt(sigma) sqrt(rho). NotDensityMatrix on invalid arguments.
double uhlmann_fidelity(const FockOperator& rho, const FockOperator& sigma);

/// Square of uhlmann_fidelity, (Tr sqrt(sqrt(sigma) rho sqrt(sigma)))^2.
double squared_fidelity(const FockOperator& rho, const FockOperator& sigma);

/// Hermitian square root with eigenvalues clamped at zero.
Eigen::MatrixXcd psd_sqrt(const Eigen::MatrixXcd& m);

/// Frobenius norm of [rho_b(0), exp(i H_+ t) exp(-i H_- t)].
double separability_commutator_residual(const ScenarioParams& scenario, double omega_t, const TruncationSpec& spec);
double separability_commutator_residual(const ScenarioParams& scenario, double omega_t);

}  // namespace hybridwig
