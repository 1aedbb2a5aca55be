#include "hybridwig/negativity.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "hybridwig/closed_form.hpp"
#include "hybridwig/errors.hpp"

namespace hybridwig {

namespace {

// 6 standard deviations of the narrowest kernel Gaussian exp(-2|beta|^2).
const double kTailMargin = 6.0 * std::sqrt(0.5);

double resolve_radius(const QuadratureSpec& spec, double automatic) {
  return spec.beta_radius.value_or(automatic);
}

QubitMarginal as_marginal(const QubitState& q) {
  return {q.rho[0][0].real(), q.rho[1][1].real(), q.rho[0][1]};
}

// Sphere integrals of |W| and W for one beta, per the chosen rule.
struct SphereSums {
  double abs = 0.0;
  double sgn = 0.0;
};

struct TensorSphere {
  std::vector<double> cos_theta, sin_theta, theta_weight;
  std::vector<double> cos_phi, sin_phi;

  explicit TensorSphere(const QuadratureSpec& spec) {
    const Rule1D& u = gauss_legendre(spec.theta_nodes);
    for (std::size_t k = 0; k < u.nodes.size(); ++k) {
      cos_theta.push_back(u.nodes[k]);
      sin_theta.push_back(std::sqrt(std::max(0.0, 1.0 - u.nodes[k] * u.nodes[k])));
      theta_weight.push_back(u.weights[k] / spec.phi_nodes);  // du dphi / (2 pi)
    }
    const Rule1D phi = periodic_trapezoid(spec.phi_nodes);
    for (double p : phi.nodes) {
      cos_phi.push_back(std::cos(p));
      sin_phi.push_back(std::sin(p));
    }
  }

  SphereSums integrate(const QubitMarginal& m) const {
    // W = A + B cos(theta) + sin(theta) (Cc cos(phi) + Cs sin(phi)).
    const double a = 0.5 * (m.m00 + m.m11);
    const double b = -0.5 * kSqrt3 * (m.m00 - m.m11);
    const double cc = kSqrt3 * m.m01.real();
    const double cs = kSqrt3 * m.m01.imag();
    CompensatedSum abs_sum;
    CompensatedSum sgn_sum;
    for (std::size_t t = 0; t < cos_theta.size(); ++t) {
      const double base = a + b * cos_theta[t];
      double row_abs = 0.0;
      double row_sgn = 0.0;
      for (std::size_t f = 0; f < cos_phi.size(); ++f) {
        const double w = base + sin_theta[t] * (cc * cos_phi[f] + cs * sin_phi[f]);
        row_abs += std::abs(w);
        row_sgn += w;
      }
      abs_sum.add(theta_weight[t] * row_abs);
      sgn_sum.add(theta_weight[t] * row_sgn);
    }
    return {abs_sum.value(), sgn_sum.value()};
  }
};

template <class PointFn>
std::pair<double, double> integrate_plane(const QuadratureSpec& spec, double radius, PointFn&& point) {
  const Rule1D axis = composite_gauss_legendre(spec.beta_nodes_per_axis, -radius, radius);
  const std::size_t n = axis.nodes.size();
  std::vector<double> row_abs(n), row_sgn(n);
  parallel_for(n, spec.threads, [&](std::size_t i) {
    CompensatedSum a, s;
    for (std::size_t j = 0; j < n; ++j) {
      const auto [va, vs] = point(cplx(axis.nodes[i], axis.nodes[j]));
      a.add(axis.weights[j] * va);
      s.add(axis.weights[j] * vs);
    }
    row_abs[i] = axis.weights[i] * a.value();
    row_sgn[i] = axis.weights[i] * s.value();
  });
  return {ordered_sum(row_abs), ordered_sum(row_sgn)};
}

template <class Integrate>
NegativityResult refine_until_converged(const QuadratureSpec& spec, Integrate&& integrate,
                                        const char* what) {
  validate(spec);
  QuadratureSpec current = spec;
  double previous = integrate(current);
  for (int k = 0; k <= spec.max_refinements; ++k) {
    const QuadratureSpec finer = refined(current);
    const double next = integrate(finer);
    const double change = 0.5 * std::abs(next - previous);
    if (change <= spec.rel_tolerance * std::abs(next)) {
      return {0.5 * (next - 1.0), next, std::max(change, kQuadratureErrorFloor), finer.beta_nodes_per_axis};
    }
    previous = next;
    current = finer;
  }
  throw QuadratureNonConvergence(std::string(what) + ": volume not converged to rel_tolerance " +
                                 std::to_string(spec.rel_tolerance) + " after " +
                                 std::to_string(spec.max_refinements) + " refinements");
}

}  // namespace

double HybridField::wigner(const PhasePoint& p) const {
  return wigner_from_marginal(marginal(p.beta), p.theta, p.phi);
}

ScenarioField::ScenarioField(ScenarioParams scenario, double omega_t)
    : scenario_(std::move(scenario)), omega_t_(omega_t) {
  validate(scenario_);
  if (!(omega_t_ >= 0.0)) throw DomainError("ScenarioField: omega_t must be >= 0");
}

QubitMarginal ScenarioField::marginal(cplx beta) const {
  return closed_form_marginal(scenario_, omega_t_, beta);
}

double ScenarioField::auto_beta_radius() const { return hybridwig::auto_beta_radius(scenario_); }

double ScenarioField::wigner(const PhasePoint& p) const { return wigner_closed_form(scenario_, omega_t_, p); }

DyadicField::DyadicField(HybridDyadState state) : state_(std::move(state)) { check_hermitian(state_); }

QubitMarginal DyadicField::marginal(cplx beta) const { return qubit_marginal(state_, beta); }

double DyadicField::auto_beta_radius() const { return max_kernel_centre(state_) + kTailMargin; }

ScenarioBranchField::ScenarioBranchField(ScenarioParams scenario, int branch, double omega_t)
    : scenario_(std::move(scenario)), branch_(branch), omega_t_(omega_t) {
  validate(scenario_);
  if (branch_ != 1 && branch_ != 2) throw DomainError("ScenarioBranchField: branch must be 1 or 2");
}

double ScenarioBranchField::wigner(cplx beta) const {
  return reduced_wigner_branch(scenario_, branch_, omega_t_, beta);
}

double ScenarioBranchField::auto_beta_radius() const { return hybridwig::auto_beta_radius(scenario_); }

BosonDyadField::BosonDyadField(BosonDyadState state) : state_(std::move(state)) {
  if (!is_hermitian(state_)) throw HermiticityViolation("BosonDyadField: state is not Hermitian");
}

double BosonDyadField::wigner(cplx beta) const { return boson_wigner(state_, beta); }

double BosonDyadField::auto_beta_radius() const { return max_kernel_centre(state_) + kTailMargin; }

double auto_beta_radius(const ScenarioParams& scenario) {
  const double g = family_amplitude(scenario.family);
  const double l = std::abs(scenario.lambda);
  const double nbar = family_nbar(scenario.family);
  return std::max(g, g + 2.0 * l) + 2.0 * l + 6.0 * std::sqrt((2.0 * nbar + 1.0) / 2.0);
}

HybridIntegrals integrate_hybrid(const HybridField& field, const QuadratureSpec& spec) {
  validate(spec);
  const double radius = resolve_radius(spec, field.auto_beta_radius());
  if (spec.sphere_rule == SphereRule::Exact) {
    const auto [a, s] = integrate_plane(spec, radius, [&](cplx beta) {
      const SphereProfile prof = sphere_profile(field.marginal(beta));
      return std::pair{sphere_abs_integral(prof), 2.0 * prof.offset};
    });
    return {a, s};
  }
  const TensorSphere sphere(spec);
  const auto [a, s] = integrate_plane(spec, radius, [&](cplx beta) {
    const SphereSums sums = sphere.integrate(field.marginal(beta));
    return std::pair{sums.abs, sums.sgn};
  });
  return {a, s};
}

BosonIntegrals integrate_boson(const BosonField& field, const QuadratureSpec& spec) {
  validate(spec);
  const double radius = resolve_radius(spec, field.auto_beta_radius());
  const auto [a, s] = integrate_plane(spec, radius, [&](cplx beta) {
    const double w = field.wigner(beta);
    return std::pair{std::abs(w), w};
  });
  return {a, s};
}

NegativityResult negativity_volume(const HybridField& field, const QuadratureSpec& spec) {
  return refine_until_converged(
      spec, [&](const QuadratureSpec& s) { return integrate_hybrid(field, s).abs_integral; },
      "hybrid negativity volume");
}

NegativityResult negativity_volume(const BosonField& field, const QuadratureSpec& spec) {
  return refine_until_converged(
      spec, [&](const QuadratureSpec& s) { return integrate_boson(field, s).abs_integral; },
      "oscillator negativity volume");
}

NegativityResult negativity_volume(const QubitState& qubit, const QuadratureSpec& spec) {
  validate(spec);
  const QubitMarginal m = as_marginal(qubit);
  if (spec.sphere_rule == SphereRule::Exact) {
    const double integral = sphere_abs_integral(sphere_profile(m));
    return {0.5 * (integral - 1.0), integral, kQuadratureErrorFloor, 0};
  }
  return refine_until_converged(
      spec, [&](const QuadratureSpec& s) { return TensorSphere(s).integrate(m).abs; },
      "qubit negativity volume");
}

NegativityResult negativity_volume_hybrid(const ScenarioParams& scenario, double omega_t,
                                          const QuadratureSpec& spec) {
  return negativity_volume(ScenarioField(scenario, omega_t), spec);
}

NegativityResult negativity_volume_qubit(double alpha, double chi, const QuadratureSpec& spec) {
  return negativity_volume(QubitState::pure(alpha, chi), spec);
}

NegativityResult negativity_volume_boson(const ScenarioParams& scenario, int branch, double omega_t,
                                         const QuadratureSpec& spec) {
  return negativity_volume(ScenarioBranchField(scenario, branch, omega_t), spec);
}

CriticalValue critical_bound(const ScenarioParams& scenario, double omega_t, const QuadratureSpec& spec) {
  validate(scenario);
  if (!std::holds_alternative<Cat>(scenario.family)) return {kPureQubitVolume, 0.0};
  const NegativityResult b1 = negativity_volume_boson(scenario, 1, omega_t, spec);
  const NegativityResult b2 = negativity_volume_boson(scenario, 2, omega_t, spec);
  const double scale = 2.0 / kSqrt3 * 0.5;
  return {scale * (b1.volume + b2.volume) + kPureQubitVolume,
          scale * (b1.error_estimate + b2.error_estimate)};
}

double critical_value(const ScenarioParams& scenario, double omega_t, const QuadratureSpec& spec) {
  return critical_bound(scenario, omega_t, spec).value;
}

const char* to_string(Verdict v) {
  return v == Verdict::WitnessedEntangled ? "WitnessedEntangled" : "NotWitnessed";
}

Verdict entanglement_verdict(const NegativityResult& volume, double critical) {
  return volume.volume > critical + volume.error_estimate ? Verdict::WitnessedEntangled
                                                          : Verdict::NotWitnessed;
}

double separable_bound(std::span<const double> weights, std::span<const double> boson_volumes) {
  if (weights.size() != boson_volumes.size()) throw DomainError("separable_bound: size mismatch");
  double s = 0.0;
  for (std::size_t i = 0; i < weights.size(); ++i) s += weights[i] * boson_volumes[i];
  return 2.0 / kSqrt3 * s + kPureQubitVolume;
}

bool separable_bound_check(std::span<const double> weights, std::span<const QubitState> qubit_states,
                           std::span<const NegativityResult> boson_branch_volumes,
                           const NegativityResult& hybrid_volume) {
  const std::size_t n = weights.size();
  if (qubit_states.size() != n || boson_branch_volumes.size() != n || n == 0) {
    throw DomainError("separable_bound_check: weights, qubit states and branch volumes must align");
  }
  double total = 0.0;
  for (double p : weights) {
    if (!(p >= 0.0)) throw DomainError("separable_bound_check: weights must be nonnegative");
    total += p;
  }
  if (std::abs(total - 1.0) > 1e-12) throw DomainError("separable_bound_check: weights must sum to 1");

  QuadratureSpec exact;
  double chain = 0.0;
  double tolerance = hybrid_volume.error_estimate;
  std::vector<double> vb(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double vq = negativity_volume(qubit_states[i], exact).volume;
    vb[i] = boson_branch_volumes[i].volume;
    chain += weights[i] * (2.0 * vq * vb[i] + vq + vb[i]);
    tolerance += weights[i] * (2.0 / kSqrt3) * boson_branch_volumes[i].error_estimate;
  }
  const double bound = separable_bound(weights, vb);
  return hybrid_volume.volume <= chain + tolerance && chain <= bound + tolerance;
}

}  // namespace hybridwig
