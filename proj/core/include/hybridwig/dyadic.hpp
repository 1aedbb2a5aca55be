#pragma once

#include <array>
#include <span>
#include <utility>
#include <vector>

#include "hybridwig/kernels.hpp"
#include "hybridwig/phase_space.hpp"

namespace hybridwig {

/// Imaginary residue tolerated in a Wigner value of a Hermitian state.
inline constexpr double kRealityTolerance = 1e-10;

/// Qubit density matrix.
struct QubitState {
  std::array<std::array<cplx, 2>, 2> rho{};

  /// sqrt(alpha)|0> + e^{i chi} sqrt(1 - alpha)|1>; DomainError unless alpha in [0, 1].
  static QubitState pure(double alpha, double chi);
  /// 1/2 (1 + r.sigma); DomainError unless |r| <= 1.
  static QubitState from_bloch(double x, double y, double z);
  static QubitState maximally_mixed() { return from_bloch(0.0, 0.0, 0.0); }

  std::array<double, 3> bloch() const;
};

/// Throws HermiticityViolation if some term lacks its conjugate-transpose
/// partner (coefficient conjugated, qubit and coherent labels swapped).
void check_hermitian(const HybridDyadState& state);
bool is_hermitian(const HybridDyadState& state);
bool is_hermitian(const BosonDyadState& state);

/// Sum over qubit-diagonal terms of coeff * <bra|ket>.
cplx trace(const HybridDyadState& state);
cplx trace(const BosonDyadState& state);

/// M(beta) for the hybrid Wigner function; no validation (hot path).
QubitMarginal qubit_marginal(const HybridDyadState& state, cplx beta);

/// Tr[rho Delta_q (x) Delta_b] at p. Validates hermiticity and reality.
double wigner_dyadic(const HybridDyadState& state, const PhasePoint& p);

/// Tr[rho Delta_b(beta)]; no validation.
double boson_wigner(const BosonDyadState& state, cplx beta);

/// |psi><psi| of a normalised pure ket built from the given components.
HybridDyadState from_pure(std::span<const KetComponent> ket);

/// Normalised |psi><psi| for a superposition of coherent states
/// sum_k weight_k |amp_k>.
BosonDyadState boson_from_pure(std::span<const std::pair<cplx, cplx>> weighted_amps);

/// rho_q (x) rho_b as dyads.
HybridDyadState product(const QubitState& qubit, const BosonDyadState& boson);

/// sum_k p_k rho_k; weights must be nonnegative and sum to one.
HybridDyadState mixture(std::span<const std::pair<double, HybridDyadState>> parts);

/// Normalised <i|rho|i> with i = branch - 1, branch in {1, 2}.
BosonDyadState branch_state(const HybridDyadState& state, int branch);

/// Oscillator state of a pure family: |gamma> or the even cat.
BosonDyadState boson_initial_state(const ScenarioFamily& family);

/// (|0> + |1>)/sqrt2 (x) oscillator state. Thermal has no dyadic form and
/// raises DomainError.
HybridDyadState initial_state(const ScenarioFamily& family);

/// Largest |(ket + bra)/2| over the terms: the Gaussian centres of the kernel.
double max_kernel_centre(const HybridDyadState& state);
double max_kernel_centre(const BosonDyadState& state);

}  // namespace hybridwig
