#include "hybridwig/fock_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>

#include "hybridwig/errors.hpp"
#include "hybridwig/kernels.hpp"

namespace hybridwig {

namespace {

using Eigen::MatrixXcd;
using Eigen::VectorXcd;

int edge_band(int cutoff) { return std::max(2, cutoff / 8); }

MatrixXcd number_ladder(int n) {
  MatrixXcd a = MatrixXcd::Zero(n, n);
  for (int k = 1; k < n; ++k) a(k - 1, k) = std::sqrt(static_cast<double>(k));
  return a;
}

// Eigenpairs of i(a^dag - a) at a fixed size; D(r) = V e^{-i r L} V^dag.
struct DisplacementGenerator {
  MatrixXcd vectors;
  Eigen::VectorXd values;
};

std::shared_ptr<const DisplacementGenerator> generator_for(int size) {
  static std::mutex mu;
  static std::map<int, std::shared_ptr<const DisplacementGenerator>> cache;
  std::lock_guard lock(mu);
  auto it = cache.find(size);
  if (it != cache.end()) return it->second;
  const MatrixXcd a = number_ladder(size);
  const MatrixXcd g = cplx(0.0, 1.0) * (a.adjoint() - a);
  Eigen::SelfAdjointEigenSolver<MatrixXcd> es(g);
  auto gen = std::make_shared<DisplacementGenerator>();
  gen->vectors = es.eigenvectors();
  gen->values = es.eigenvalues();
  cache.emplace(size, gen);
  return gen;
}

// Full displacement matrix at the given internal size.
MatrixXcd displacement_internal(cplx zeta, int size) {
  const double r = std::abs(zeta);
  if (r == 0.0) return MatrixXcd::Identity(size, size);
  const auto gen = generator_for(size);
  VectorXcd phases(size);
  for (int k = 0; k < size; ++k) phases(k) = std::polar(1.0, -r * gen->values(k));
  MatrixXcd d = gen->vectors * phases.asDiagonal() * gen->vectors.adjoint();
  const double ang = std::arg(zeta);
  for (int m = 0; m < size; ++m) {
    for (int n = 0; n < size; ++n) d(m, n) *= std::polar(1.0, ang * (m - n));
  }
  return d;
}

void check_vacuum_column(const MatrixXcd& cropped, double tol, const char* what) {
  const double lost = 1.0 - cropped.col(0).squaredNorm();
  if (lost > tol) {
    throw CutoffInsufficient(std::string(what) + ": displaced vacuum loses " + std::to_string(lost) +
                             " beyond the cutoff");
  }
}

void check_edge(const FockOperator& rho, double tol, const char* what) {
  const double edge = edge_population(rho);
  if (edge > tol) {
    throw CutoffInsufficient(std::string(what) + ": population " + std::to_string(edge) +
                             " near the cutoff " + std::to_string(rho.cutoff()));
  }
}

std::uint64_t bits(double x) {
  std::uint64_t u;
  std::memcpy(&u, &x, sizeof u);
  return u;
}

std::shared_ptr<const Propagator> hybrid_propagator(double lambda, const TruncationSpec& spec) {
  static std::mutex mu;
  static std::map<std::pair<std::uint64_t, int>, std::shared_ptr<const Propagator>> cache;
  const auto key = std::make_pair(bits(lambda), spec.cutoff);
  {
    std::lock_guard lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  auto prop = std::make_shared<const Propagator>(hybrid_hamiltonian(lambda, 1.0, spec));
  std::lock_guard lock(mu);
  if (cache.size() > 32) cache.clear();
  return cache.emplace(key, prop).first->second;
}

}  // namespace

FockOperator::FockOperator(int cutoff, Eigen::MatrixXcd entries) : cutoff_(cutoff), entries_(std::move(entries)) {
  if (cutoff_ < 1) throw DomainError("FockOperator: cutoff must be positive");
  if (entries_.rows() != entries_.cols() || (entries_.rows() != cutoff_ && entries_.rows() != 2 * cutoff_)) {
    throw DomainError("FockOperator: matrix must be N x N or 2N x 2N");
  }
  if (!entries_.allFinite()) throw DomainError("FockOperator: non-finite entry");
}

FockOperator FockOperator::block(int i, int j) const {
  if (!is_hybrid()) throw DomainError("FockOperator::block: operator has no qubit factor");
  if (i < 0 || i > 1 || j < 0 || j > 1) throw DomainError("FockOperator::block: qubit index must be 0 or 1");
  return {cutoff_, entries_.block(i * cutoff_, j * cutoff_, cutoff_, cutoff_)};
}

void validate(const TruncationSpec& spec) {
  if (spec.cutoff < 8) throw DomainError("TruncationSpec: cutoff must be >= 8");
  if (!(spec.leakage_tol > 0.0) || spec.leakage_tol > 1e-6) {
    throw DomainError("TruncationSpec: leakage_tol must be in (0, 1e-6]");
  }
}

void check_density_matrix(const FockOperator& rho) {
  const MatrixXcd& m = rho.matrix();
  if ((m - m.adjoint()).cwiseAbs().maxCoeff() > kDensityTolerance) {
    throw NotDensityMatrix("density matrix is not Hermitian");
  }
  const cplx tr = m.trace();
  if (std::abs(tr - 1.0) > kDensityTolerance) {
    throw NotDensityMatrix("density matrix trace " + std::to_string(tr.real()) + " differs from 1");
  }
  Eigen::SelfAdjointEigenSolver<MatrixXcd> es(0.5 * (m + m.adjoint()), Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < -kDensityTolerance) {
    throw NotDensityMatrix("density matrix has a negative eigenvalue " + std::to_string(es.eigenvalues().minCoeff()));
  }
}

double edge_population(const FockOperator& rho) {
  const int n = rho.cutoff();
  const int band = edge_band(n);
  const int blocks = rho.is_hybrid() ? 2 : 1;
  double sum = 0.0;
  for (int q = 0; q < blocks; ++q) {
    for (int k = n - band; k < n; ++k) sum += std::abs(rho(q * n + k, q * n + k));
  }
  return sum;
}

LadderOps ladder_ops(const TruncationSpec& spec) {
  validate(spec);
  MatrixXcd a = number_ladder(spec.cutoff);
  MatrixXcd ad = a.adjoint();
  return {FockOperator(spec.cutoff, std::move(a)), FockOperator(spec.cutoff, std::move(ad))};
}

FockOperator displacement(cplx zeta, const TruncationSpec& spec) {
  validate(spec);
  if (!std::isfinite(zeta.real()) || !std::isfinite(zeta.imag())) throw DomainError("displacement: zeta not finite");
  const int n = spec.cutoff;
  MatrixXcd d = displacement_internal(zeta, 2 * n).topLeftCorner(n, n);
  check_vacuum_column(d, spec.leakage_tol, "displacement");
  return {n, std::move(d)};
}

FockOperator parity(const TruncationSpec& spec) {
  validate(spec);
  MatrixXcd p = MatrixXcd::Zero(spec.cutoff, spec.cutoff);
  for (int k = 0; k < spec.cutoff; ++k) p(k, k) = (k % 2 == 0) ? 1.0 : -1.0;
  return {spec.cutoff, std::move(p)};
}

FockOperator conditional_hamiltonian(double lambda, double omega, int sign, const TruncationSpec& spec) {
  validate(spec);
  if (sign != 1 && sign != -1) throw DomainError("conditional_hamiltonian: sign must be +1 or -1");
  const int n = spec.cutoff;
  const MatrixXcd a = number_ladder(n);
  const double g = lambda * omega;
  MatrixXcd h = omega * (a.adjoint() * a) + (sign * g) * (a + a.adjoint());
  return {n, std::move(h)};
}

FockOperator hybrid_hamiltonian(double lambda, double omega, const TruncationSpec& spec) {
  const int n = spec.cutoff;
  MatrixXcd h = MatrixXcd::Zero(2 * n, 2 * n);
  h.topLeftCorner(n, n) = conditional_hamiltonian(lambda, omega, +1, spec).matrix();
  h.bottomRightCorner(n, n) = conditional_hamiltonian(lambda, omega, -1, spec).matrix();
  return {n, std::move(h)};
}

Propagator::Propagator(const FockOperator& hamiltonian) : cutoff_(hamiltonian.cutoff()) {
  const MatrixXcd& h = hamiltonian.matrix();
  if ((h - h.adjoint()).cwiseAbs().maxCoeff() > 1e-12 * std::max(1.0, h.cwiseAbs().maxCoeff())) {
    throw HermiticityViolation("Propagator: Hamiltonian is not Hermitian");
  }
  Eigen::SelfAdjointEigenSolver<MatrixXcd> es(h);
  vectors_ = es.eigenvectors();
  values_ = es.eigenvalues();
}

Eigen::MatrixXcd Propagator::unitary(double omega_t) const {
  VectorXcd phases(values_.size());
  for (Eigen::Index k = 0; k < values_.size(); ++k) phases(k) = std::polar(1.0, -omega_t * values_(k));
  return vectors_ * phases.asDiagonal() * vectors_.adjoint();
}

FockOperator Propagator::evolve(const FockOperator& rho, double omega_t) const {
  if (rho.dim() != vectors_.rows()) throw DomainError("Propagator::evolve: dimension mismatch");
  const MatrixXcd u = unitary(omega_t);
  return {cutoff_, u * rho.matrix() * u.adjoint()};
}

FockOperator evolve_oracle(const FockOperator& rho0, double lambda, double omega_t, const TruncationSpec& spec) {
  validate(spec);
  if (!rho0.is_hybrid() || rho0.cutoff() != spec.cutoff) {
    throw DomainError("evolve_oracle: expected a hybrid operator at the spec cutoff");
  }
  if (!std::isfinite(lambda) || !std::isfinite(omega_t)) throw DomainError("evolve_oracle: non-finite input");
  check_density_matrix(rho0);
  FockOperator out = hybrid_propagator(lambda, spec)->evolve(rho0, omega_t);
  check_edge(out, spec.leakage_tol, "evolve_oracle");
  return out;
}

namespace {

// (2/pi) D Pi D^dagger, computed at 2N and cropped. edge(m) is the weight
// of D|m> in the top band of the internal basis, where truncation bites.
struct BosonKernelMatrix {
  MatrixXcd kernel;
  Eigen::VectorXd edge;
};

BosonKernelMatrix boson_kernel_matrix(cplx beta, int n) {
  const MatrixXcd d = displacement_internal(beta, 2 * n);
  Eigen::VectorXd signs(2 * n);
  for (int k = 0; k < 2 * n; ++k) signs(k) = (k % 2 == 0) ? 1.0 : -1.0;
  const int band = edge_band(2 * n);
  const MatrixXcd left = d.leftCols(n);
  const MatrixXcd top = d.topRows(n);
  BosonKernelMatrix out{(2.0 / kPi) * (top * signs.asDiagonal() * top.adjoint()),
                        left.bottomRows(band).colwise().squaredNorm().transpose()};
  return out;
}

void check_support(const FockOperator& rho, const Eigen::VectorXd& edge, double tol, const char* what) {
  const int n = rho.cutoff();
  const int blocks = rho.is_hybrid() ? 2 : 1;
  double risk = 0.0;
  for (int q = 0; q < blocks; ++q) {
    for (int m = 0; m < n; ++m) risk += std::abs(rho(q * n + m, q * n + m)) * edge(m);
  }
  if (risk > tol) {
    throw CutoffInsufficient(std::string(what) + ": displaced state reaches the cutoff (weight " +
                             std::to_string(risk) + ")");
  }
}

cplx trace_product(const MatrixXcd& a, const MatrixXcd& b) { return (a.array() * b.transpose().array()).sum(); }

double real_part(cplx w, const char* what) {
  if (std::abs(w.imag()) > 1e-9 * std::max(1.0, std::abs(w.real()))) {
    throw HermiticityViolation(std::string(what) + ": operator is not Hermitian, imaginary part " +
                               std::to_string(w.imag()));
  }
  return w.real();
}

}  // namespace

double wigner_oracle(const FockOperator& rho, const PhasePoint& p, const TruncationSpec& spec) {
  validate(p);
  if (!rho.is_hybrid()) throw DomainError("wigner_oracle: expected a hybrid operator");
  const int n = rho.cutoff();
  const BosonKernelMatrix k = boson_kernel_matrix(p.beta, n);
  check_support(rho, k.edge, spec.leakage_tol, "wigner_oracle");
  const MatrixXcd& kb = k.kernel;
  const QubitKernel kq = qubit_kernel(p.theta, p.phi);
  cplx w = 0.0;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      w += kq[j][i] * trace_product(rho.matrix().block(i * n, j * n, n, n), kb);
    }
  }
  return real_part(w, "wigner_oracle");
}

double boson_wigner_oracle(const FockOperator& rho, cplx beta, const TruncationSpec& spec) {
  if (!std::isfinite(beta.real()) || !std::isfinite(beta.imag())) throw DomainError("boson_wigner_oracle: beta not finite");
  if (rho.is_hybrid()) throw DomainError("boson_wigner_oracle: expected an oscillator operator");
  const BosonKernelMatrix k = boson_kernel_matrix(beta, rho.cutoff());
  check_support(rho, k.edge, spec.leakage_tol, "boson_wigner_oracle");
  return real_part(trace_product(rho.matrix(), k.kernel), "boson_wigner_oracle");
}

FockOperator thermal_dm(double nbar, const TruncationSpec& spec) {
  validate(spec);
  if (!(nbar >= 0.0) || !std::isfinite(nbar)) throw DomainError("thermal_dm: nbar must be finite and >= 0");
  const int n = spec.cutoff;
  const double q = nbar / (nbar + 1.0);
  const double tail = std::pow(q, n);
  if (tail > spec.leakage_tol) {
    throw CutoffInsufficient("thermal_dm: tail weight " + std::to_string(tail) + " beyond cutoff " +
                             std::to_string(n));
  }
  MatrixXcd rho = MatrixXcd::Zero(n, n);
  double p = 1.0 / (nbar + 1.0);
  for (int k = 0; k < n; ++k) {
    rho(k, k) = p / (1.0 - tail);
    p *= q;
  }
  return {n, std::move(rho)};
}

Eigen::VectorXcd coherent_ket(cplx amp, int cutoff) {
  if (cutoff < 1) throw DomainError("coherent_ket: cutoff must be positive");
  VectorXcd v(cutoff);
  v(0) = std::exp(-0.5 * std::norm(amp));
  for (int k = 1; k < cutoff; ++k) v(k) = v(k - 1) * amp / std::sqrt(static_cast<double>(k));
  return v;
}

namespace {

VectorXcd checked_ket(cplx amp, const TruncationSpec& spec) {
  VectorXcd v = coherent_ket(amp, spec.cutoff);
  const double lost = 1.0 - v.squaredNorm();
  if (lost > spec.leakage_tol) {
    throw CutoffInsufficient("to_fock: coherent amplitude " + std::to_string(std::abs(amp)) +
                             " too large for cutoff " + std::to_string(spec.cutoff));
  }
  return v;
}

}  // namespace

FockOperator to_fock(const HybridDyadState& state, const TruncationSpec& spec) {
  validate(spec);
  const int n = spec.cutoff;
  MatrixXcd rho = MatrixXcd::Zero(2 * n, 2 * n);
  for (const DyadTerm& t : state.terms) {
    if (t.qubit.ket < 0 || t.qubit.ket > 1 || t.qubit.bra < 0 || t.qubit.bra > 1) {
      throw DomainError("to_fock: qubit label must be 0 or 1");
    }
    const VectorXcd k = checked_ket(t.boson.ket_amp, spec);
    const VectorXcd b = checked_ket(t.boson.bra_amp, spec);
    rho.block(t.qubit.ket * n, t.qubit.bra * n, n, n) += t.coeff * (k * b.adjoint());
  }
  return {n, std::move(rho)};
}

FockOperator to_fock(const BosonDyadState& state, const TruncationSpec& spec) {
  validate(spec);
  const int n = spec.cutoff;
  MatrixXcd rho = MatrixXcd::Zero(n, n);
  for (const BosonDyadTerm& t : state.terms) {
    rho += t.coeff * (checked_ket(t.boson.ket_amp, spec) * checked_ket(t.boson.bra_amp, spec).adjoint());
  }
  return {n, std::move(rho)};
}

FockOperator boson_initial_density(const ScenarioFamily& family, const TruncationSpec& spec) {
  if (const auto* th = std::get_if<Thermal>(&family)) return thermal_dm(th->nbar, spec);
  return to_fock(boson_initial_state(family), spec);
}

FockOperator initial_density(const ScenarioFamily& family, const TruncationSpec& spec) {
  const FockOperator b = boson_initial_density(family, spec);
  const int n = spec.cutoff;
  MatrixXcd rho(2 * n, 2 * n);
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) rho.block(i * n, j * n, n, n) = 0.5 * b.matrix();
  }
  return {n, std::move(rho)};
}

int auto_cutoff(const ScenarioParams& scenario) {
  validate(scenario);
  const double nbar = family_nbar(scenario.family);
  const double a = family_amplitude(scenario.family) + 2.0 * std::abs(scenario.lambda) + std::sqrt(nbar);
  int n = static_cast<int>(std::ceil(a * a + 10.0 * a + 20.0));
  if (nbar > 0.0) {
    // geometric tail below 1e-13 with the top band to spare
    const double q = nbar / (nbar + 1.0);
    n = std::max(n, static_cast<int>(std::ceil(1.15 * std::log(1e-13) / std::log(q))));
  }
  return n;
}

TruncationSpec auto_truncation(const ScenarioParams& scenario) { return {auto_cutoff(scenario), 1e-10}; }

}  // namespace hybridwig
