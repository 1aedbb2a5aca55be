#include "hybridwig/fidelity.hpp"

#include <cmath>
#include <string>

#include "hybridwig/dynamics.hpp"
#include "hybridwig/errors.hpp"

namespace hybridwig {

namespace {

void check_time(double omega_t, const char* what) {
  if (!(omega_t >= 0.0) || !std::isfinite(omega_t)) throw DomainError(std::string(what) + ": omega_t must be >= 0");
}

double cat_fidelity(cplx gamma, cplx a, double omega_t) {
  const cplx g = std::polar(1.0, -omega_t) * gamma;
  const double s = std::exp(-2.0 * std::norm(a - g)) + std::exp(-2.0 * std::norm(a + g)) +
                   2.0 * std::exp(-2.0 * std::norm(a)) * std::cos(4.0 * std::imag(std::conj(a) * std::conj(gamma)));
  return std::abs(s) / cat_normalization(gamma);
}

FockOperator conditional(const FockOperator& rho, const ScenarioParams& scenario, int sign, double omega_t,
                         const TruncationSpec& spec) {
  const Propagator prop(conditional_hamiltonian(scenario.lambda, 1.0, sign, spec));
  const FockOperator out = prop.evolve(rho, omega_t);
  const double edge = edge_population(out);
  if (edge > kSigmaLeakage) {
    throw CutoffInsufficient("build_sigma_pair: population " + std::to_string(edge) + " near the cutoff");
  }
  const Eigen::MatrixXcd m = out.matrix();
  return {out.cutoff(), 0.5 * (m + m.adjoint()) / m.trace().real()};
}

}  // namespace

FidelityResult fidelity_closed_form(const ScenarioParams& scenario, double omega_t) {
  validate(scenario);
  check_time(omega_t, "fidelity_closed_form");
  const cplx a = alpha_t(scenario.lambda, omega_t);
  double f = 1.0;
  if (std::holds_alternative<Coherent>(scenario.family)) {
    f = std::exp(-2.0 * std::norm(a));
  } else if (const auto* th = std::get_if<Thermal>(&scenario.family)) {
    f = std::exp(-2.0 * std::norm(a) / (2.0 * th->nbar + 1.0));
  } else {
    f = cat_fidelity(std::get<Cat>(scenario.family).gamma, a, omega_t);
  }
  return {f, 1.0 - f > kFidelityTolerance};
}

SigmaPair build_sigma_pair(const ScenarioParams& scenario, double omega_t, const TruncationSpec& spec) {
  validate(scenario);
  validate(spec);
  check_time(omega_t, "build_sigma_pair");
  const FockOperator rho = boson_initial_density(scenario.family, spec);
  return {conditional(rho, scenario, +1, omega_t, spec), conditional(rho, scenario, -1, omega_t, spec)};
}

SigmaPair build_sigma_pair(const ScenarioParams& scenario, double omega_t) {
  return build_sigma_pair(scenario, omega_t, auto_truncation(scenario));
}

Eigen::MatrixXcd psd_sqrt(const Eigen::MatrixXcd& m) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(0.5 * (m + m.adjoint()));
  const Eigen::VectorXd root = es.eigenvalues().cwiseMax(0.0).cwiseSqrt();
  return es.eigenvectors() * root.asDiagonal() * es.eigenvectors().adjoint();
}

double uhlmann_fidelity(const FockOperator& rho, const FockOperator& sigma) {
  if (rho.dim() != sigma.dim()) throw NotDensityMatrix("uhlmann_fidelity: dimension mismatch");
  check_density_matrix(rho);
  check_density_matrix(sigma);
  const Eigen::MatrixXcd prod = psd_sqrt(sigma.matrix()) * psd_sqrt(rho.matrix());
  Eigen::BDCSVD<Eigen::MatrixXcd> svd(prod);
  return svd.singularValues().sum();
}

double squared_fidelity(const FockOperator& rho, const FockOperator& sigma) {
  const double f = uhlmann_fidelity(rho, sigma);
  return f * f;
}

double separability_commutator_residual(const ScenarioParams& scenario, double omega_t, const TruncationSpec& spec) {
  validate(scenario);
  validate(spec);
  check_time(omega_t, "separability_commutator_residual");
  const FockOperator rho = boson_initial_density(scenario.family, spec);
  const Propagator plus(conditional_hamiltonian(scenario.lambda, 1.0, +1, spec));
  const Propagator minus(conditional_hamiltonian(scenario.lambda, 1.0, -1, spec));
  // exp(i H_+ t) = U_+(-t)
  const Eigen::MatrixXcd w = plus.unitary(-omega_t) * minus.unitary(omega_t);
  // truncation check: the state carried by w must stay inside the basis
  const FockOperator moved(spec.cutoff, w * rho.matrix() * w.adjoint());
  if (edge_population(moved) > kSigmaLeakage) {
    throw CutoffInsufficient("separability_commutator_residual: population near the cutoff");
  }
  return (rho.matrix() * w - w * rho.matrix()).norm();
}

double separability_commutator_residual(const ScenarioParams& scenario, double omega_t) {
  return separability_commutator_residual(scenario, omega_t, auto_truncation(scenario));
}

}  // namespace hybridwig
