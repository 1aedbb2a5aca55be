#include "hybridwig/closed_form.hpp"

#include <cmath>

#include "hybridwig/dynamics.hpp"
#include "hybridwig/errors.hpp"

namespace hybridwig {

namespace {

double gauss(cplx beta, cplx centre, double rate = 2.0) { return std::exp(-rate * std::norm(beta - centre)); }

struct Evolved {
  cplx alpha;
  cplx gamma_t;
  cplx gamma;
};

Evolved evolve_labels(double lambda, double omega_t, cplx gamma) {
  if (!(omega_t >= 0.0)) throw DomainError("closed form: omega_t must be >= 0");
  return {alpha_t(lambda, omega_t), std::polar(1.0, -omega_t) * gamma, gamma};
}

// 4 Im[alpha^* beta], the phase of the qubit coherence in every family.
double coherence_phase(cplx alpha, cplx beta) { return 4.0 * std::imag(std::conj(alpha) * beta); }

struct CatTerms {
  double p0;  // |0><0| block
  double p1;  // |1><1| block
  double q;   // coherence envelope
};

CatTerms cat_terms(const Evolved& e, cplx beta) {
  const cplx a = e.alpha;
  const cplx g = e.gamma_t;
  const double eta = std::imag(std::conj(a) * std::conj(e.gamma));
  const double fringe = std::imag(std::conj(g) * beta);
  return {
      gauss(beta, a + g) + gauss(beta, a - g) + 2.0 * gauss(beta, a) * std::cos(4.0 * (eta + fringe)),
      gauss(beta, -a + g) + gauss(beta, -a - g) + 2.0 * gauss(beta, -a) * std::cos(4.0 * (eta - fringe)),
      gauss(beta, g) + gauss(beta, -g) + 2.0 * gauss(beta, 0.0) * std::cos(4.0 * fringe),
  };
}

}  // namespace

double wigner_closed_form(const ScenarioParams& scenario, double omega_t, const PhasePoint& p) {
  validate(scenario);
  const double c = std::cos(p.theta);
  const double s = std::sin(p.theta);
  const double lam = scenario.lambda;
  const cplx beta = p.beta;

  if (const auto* f = std::get_if<Coherent>(&scenario.family)) {
    const Evolved e = evolve_labels(lam, omega_t, f->gamma);
    const double psi = coherence_phase(e.alpha, beta);
    return ((1.0 - kSqrt3 * c) * gauss(beta, e.alpha + e.gamma_t) +
            (1.0 + kSqrt3 * c) * gauss(beta, -e.alpha + e.gamma_t) +
            2.0 * kSqrt3 * s * gauss(beta, e.gamma_t) * std::cos(p.phi + psi)) /
           (2.0 * kPi);
  }
  if (const auto* f = std::get_if<Thermal>(&scenario.family)) {
    const Evolved e = evolve_labels(lam, omega_t, 0.0);
    const double width = 2.0 * f->nbar + 1.0;
    const double rate = 2.0 / width;
    const double psi = coherence_phase(e.alpha, beta);
    return ((1.0 - kSqrt3 * c) * gauss(beta, e.alpha, rate) +
            (1.0 + kSqrt3 * c) * gauss(beta, -e.alpha, rate) +
            2.0 * kSqrt3 * gauss(beta, 0.0, rate) * s * std::cos(p.phi + psi)) /
           (2.0 * kPi * width);
  }
  const auto& f = std::get<Cat>(scenario.family);
  const Evolved e = evolve_labels(lam, omega_t, f.gamma);
  const CatTerms t = cat_terms(e, beta);
  // Coherence phase is phi + 4 Im[alpha^* beta]; the printed form puts phi
  // inside the Im bracket, which disagrees with the dyadic evaluation.
  const double psi = coherence_phase(e.alpha, beta);
  return (0.5 * (1.0 - kSqrt3 * c) * t.p0 + 0.5 * (1.0 + kSqrt3 * c) * t.p1 +
          kSqrt3 * s * std::cos(p.phi + psi) * t.q) /
         (cat_normalization(f.gamma) * kPi);
}

QubitMarginal closed_form_marginal(const ScenarioParams& scenario, double omega_t, cplx beta) {
  const double lam = scenario.lambda;
  if (const auto* f = std::get_if<Coherent>(&scenario.family)) {
    const Evolved e = evolve_labels(lam, omega_t, f->gamma);
    const double psi = coherence_phase(e.alpha, beta);
    return {gauss(beta, e.alpha + e.gamma_t) / kPi, gauss(beta, -e.alpha + e.gamma_t) / kPi,
            std::polar(gauss(beta, e.gamma_t) / kPi, -psi)};
  }
  if (const auto* f = std::get_if<Thermal>(&scenario.family)) {
    const Evolved e = evolve_labels(lam, omega_t, 0.0);
    const double width = 2.0 * f->nbar + 1.0;
    const double rate = 2.0 / width;
    const double norm = 1.0 / (kPi * width);
    const double psi = coherence_phase(e.alpha, beta);
    return {norm * gauss(beta, e.alpha, rate), norm * gauss(beta, -e.alpha, rate),
            std::polar(norm * gauss(beta, 0.0, rate), -psi)};
  }
  const auto& f = std::get<Cat>(scenario.family);
  const Evolved e = evolve_labels(lam, omega_t, f.gamma);
  const CatTerms t = cat_terms(e, beta);
  const double norm = 1.0 / (cat_normalization(f.gamma) * kPi);
  return {norm * t.p0, norm * t.p1, std::polar(norm * t.q, -coherence_phase(e.alpha, beta))};
}

double reduced_wigner_branch(const ScenarioParams& scenario, int branch, double omega_t, cplx beta) {
  if (branch != 1 && branch != 2) throw DomainError("reduced_wigner_branch: branch must be 1 or 2");
  validate(scenario);
  const QubitMarginal m = closed_form_marginal(scenario, omega_t, beta);
  // Each qubit-diagonal block carries weight 1/2.
  return 2.0 * (branch == 1 ? m.m00 : m.m11);
}

}  // namespace hybridwig
