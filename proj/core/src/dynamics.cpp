#include "hybridwig/dynamics.hpp"

#include <cmath>
#include <string>

#include "hybridwig/dyadic.hpp"
#include "hybridwig/errors.hpp"

namespace hybridwig {

cplx alpha_t(double lambda, double omega_t) { return lambda * (std::polar(1.0, -omega_t) - 1.0); }

double c_t(double lambda, double omega_t) { return lambda * lambda * (omega_t - std::sin(omega_t)); }

Coupling coupling_from_physical(const PhysicalSetup& s) {
  const auto positive = [](double v, const char* name) {
    if (!(v > 0.0) || !std::isfinite(v)) {
      throw DomainError(std::string("PhysicalSetup: ") + name + " must be > 0");
    }
  };
  positive(s.grav_const, "grav_const");
  positive(s.mass_oscillator, "mass_oscillator");
  positive(s.mass_particle, "mass_particle");
  positive(s.omega, "omega");
  positive(s.hbar, "hbar");
  if (!(s.separation >= 0.0) || !(s.distance >= 0.0)) {
    throw DomainError("PhysicalSetup: separation and distance must be >= 0");
  }
  if (s.separation == 0.0 && s.distance == 0.0) {
    throw DomainError("PhysicalSetup: separation and distance cannot both vanish");
  }
  const double r2 = s.distance * s.distance + 0.25 * s.separation * s.separation;
  const double force_gradient =
      s.grav_const * s.mass_oscillator * s.mass_particle * s.separation / (r2 * std::sqrt(r2));
  const double g = force_gradient / std::sqrt(2.0 * s.mass_oscillator * s.omega * s.hbar);
  return {g, g / s.omega};
}

double nbar_from_temperature(double temperature, double omega, double hbar, double k_boltzmann) {
  if (!(temperature >= 0.0)) throw DomainError("nbar_from_temperature: temperature must be >= 0");
  if (!(omega > 0.0) || !(hbar > 0.0) || !(k_boltzmann > 0.0)) {
    throw DomainError("nbar_from_temperature: omega, hbar and k_B must be > 0");
  }
  return k_boltzmann * temperature / (2.0 * hbar * omega);
}

HybridDyadState evolve_dyadic(const HybridDyadState& initial, double lambda, double omega_t) {
  check_hermitian(initial);
  const cplx a = alpha_t(lambda, omega_t);
  const cplx rot = std::polar(1.0, -omega_t);
  const cplx global = std::polar(1.0, c_t(lambda, omega_t));

  // e^{-i w t n} D(-s alpha^*) |amp> = f_s(amp) |rot*amp + s alpha>,
  // f_s(amp) = exp(s (alpha amp - alpha^* amp^*) / 2) with s = +1 for |0>.
  const auto label = [&](int q, cplx amp) { return rot * amp + (q == 0 ? a : -a); };
  const auto factor = [&](int q, cplx amp) {
    const double s = q == 0 ? 1.0 : -1.0;
    return global * std::exp(0.5 * s * (a * amp - std::conj(a) * std::conj(amp)));
  };

  HybridDyadState out;
  out.terms.reserve(initial.terms.size());
  for (const auto& t : initial.terms) {
    const cplx coeff = t.coeff * factor(t.qubit.ket, t.boson.ket_amp) *
                       std::conj(factor(t.qubit.bra, t.boson.bra_amp));
    out.terms.push_back({coeff,
                         t.qubit,
                         {label(t.qubit.ket, t.boson.ket_amp), label(t.qubit.bra, t.boson.bra_amp)}});
  }
  return out;
}

HybridDyadState evolved_state(const ScenarioParams& scenario, double omega_t) {
  validate(scenario);
  return evolve_dyadic(initial_state(scenario.family), scenario.lambda, omega_t);
}

}  // namespace hybridwig
