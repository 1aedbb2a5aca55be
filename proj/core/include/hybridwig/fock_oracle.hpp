#pragma once

#include <Eigen/Dense>

#include "hybridwig/dyadic.hpp"
#include "hybridwig/phase_space.hpp"

namespace hybridwig {

/// Dense operator on the truncated number basis |0>..|N-1>, optionally
/// tensored with a qubit (dimension 2N, index = qubit * N + n).
class FockOperator {
 public:
  FockOperator(int cutoff, Eigen::MatrixXcd entries);

  int cutoff() const { return cutoff_; }
  bool is_hybrid() const { return entries_.rows() == 2 * cutoff_; }
  Eigen::Index dim() const { return entries_.rows(); }
  const Eigen::MatrixXcd& matrix() const { return entries_; }
  cplx operator()(Eigen::Index i, Eigen::Index j) const { return entries_(i, j); }

  cplx trace() const { return entries_.trace(); }

  /// N x N block <i| . |j> of a hybrid operator.
  FockOperator block(int i, int j) const;

 private:
  int cutoff_;
  Eigen::MatrixXcd entries_;
};

struct TruncationSpec {
  int cutoff = 40;
  double leakage_tol = 1e-10;  ///< tolerated probability in the top band of levels
};

/// DomainError unless cutoff >= 8 and 0 < leakage_tol <= 1e-6.
void validate(const TruncationSpec& spec);

/// Tolerance used by the density-matrix checks (hermiticity, trace, spectrum floor).
inline constexpr double kDensityTolerance = 1e-10;

/// Throws NotDensityMatrix unless Hermitian, unit trace and eigenvalues >= -1e-10.
void check_density_matrix(const FockOperator& rho);

/// Probability held by the top max(2, N/8) number states (both qubit blocks).
double edge_population(const FockOperator& rho);

struct LadderOps {
  FockOperator a;
  FockOperator a_dag;
};
LadderOps ladder_ops(const TruncationSpec& spec);

/// exp(zeta a^dag - zeta^* a), exponentiated at 2N and cropped to N.
/// CutoffInsufficient if D|0> loses more than leakage_tol beyond the cutoff.
FockOperator displacement(cplx zeta, const TruncationSpec& spec);

/// diag((-1)^n).
FockOperator parity(const TruncationSpec& spec);

/// omega a^dag a + sigma_z (x) g (a + a^dag), g = lambda omega, dimension 2N.
FockOperator hybrid_hamiltonian(double lambda, double omega, const TruncationSpec& spec);

/// omega a^dag a + sign * g (a + a^dag) on the oscillator alone.
FockOperator conditional_hamiltonian(double lambda, double omega, int sign, const TruncationSpec& spec);

/// Hermitian generator factorised once; propagates for any time.
class Propagator {
 public:
  explicit Propagator(const FockOperator& hamiltonian);
  /// exp(-i H t) with t in units where omega = 1.
  Eigen::MatrixXcd unitary(double omega_t) const;
  /// U rho U^dagger.
  FockOperator evolve(const FockOperator& rho, double omega_t) const;

 private:
  int cutoff_;
  Eigen::MatrixXcd vectors_;
  Eigen::VectorXd values_;
};

/// exp(-iHt) rho0 exp(iHt) for the hybrid Hamiltonian with omega = 1.
FockOperator evolve_oracle(const FockOperator& rho0, double lambda, double omega_t, const TruncationSpec& spec);

/// Tr[rho (Delta_q (x) Delta_b)] with Delta_b = (2/pi) D Pi D^dagger built from matrices.
/// CutoffInsufficient if the populated levels, once displaced, reach the top
/// of the internal basis with more than leakage_tol weight.
double wigner_oracle(const FockOperator& rho, const PhasePoint& p, const TruncationSpec& spec);

/// Tr[rho_b Delta_b(beta)] for an oscillator-only operator.
double boson_wigner_oracle(const FockOperator& rho, cplx beta, const TruncationSpec& spec);

/// Geometric state nbar^n / (nbar + 1)^{n+1}, renormalised after truncation.
/// CutoffInsufficient if the discarded tail exceeds leakage_tol.
FockOperator thermal_dm(double nbar, const TruncationSpec& spec);

/// e^{-|amp|^2/2} amp^n / sqrt(n!), n < cutoff.
Eigen::VectorXcd coherent_ket(cplx amp, int cutoff);

/// Dense matrices of dyadic states (coherent kets expanded in the number basis).
FockOperator to_fock(const HybridDyadState& state, const TruncationSpec& spec);
FockOperator to_fock(const BosonDyadState& state, const TruncationSpec& spec);

/// Oscillator state at t = 0 for any family, thermal included.
FockOperator boson_initial_density(const ScenarioFamily& family, const TruncationSpec& spec);

/// |+><+| (x) boson_initial_density.
FockOperator initial_density(const ScenarioFamily& family, const TruncationSpec& spec);

/// N = ceil(A^2 + 10 A + 20), A = |gamma| + 2|lambda| + sqrt(nbar); thermal
/// families also get enough levels for a geometric tail below 1e-13.
int auto_cutoff(const ScenarioParams& scenario);
TruncationSpec auto_truncation(const ScenarioParams& scenario);

}  // namespace hybridwig
