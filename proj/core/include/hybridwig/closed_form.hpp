#pragma once

#include "hybridwig/kernels.hpp"
#include "hybridwig/phase_space.hpp"

namespace hybridwig {

/// Hybrid Wigner function of the evolved qubit-coherent, qubit-thermal or
/// qubit-cat state, written out as Gaussians in beta. omega_t must be >= 0.
double wigner_closed_form(const ScenarioParams& scenario, double omega_t, const PhasePoint& p);

/// The same function as a qubit marginal M(beta); Tr[M Delta_q] reproduces
/// wigner_closed_form.
QubitMarginal closed_form_marginal(const ScenarioParams& scenario, double omega_t, cplx beta);

/// Wigner function of the normalised oscillator branch conditioned on qubit
/// |branch - 1>, with the convention that it integrates to one over the plane.
double reduced_wigner_branch(const ScenarioParams& scenario, int branch, double omega_t, cplx beta);

}  // namespace hybridwig
