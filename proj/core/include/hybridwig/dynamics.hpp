#pragma once

#include "hybridwig/phase_space.hpp"

namespace hybridwig {

/// Physical inputs of the linearised Newtonian coupling between a spatially
/// split particle and an oscillator. hbar defaults to SI; set it to 1 for
/// natural units.
struct PhysicalSetup {
  double grav_const = 6.67430e-11;  ///< m^3 kg^-1 s^-2
  double mass_oscillator = 1.0;     ///< kg
  double mass_particle = 1.0;       ///< kg
  double separation = 0.0;          ///< split of the particle, m
  double distance = 1.0;            ///< particle-oscillator distance, m
  double omega = 1.0;               ///< rad/s
  double hbar = 1.054571817e-34;    ///< J s
};

struct Coupling {
  double g = 0.0;       ///< rad/s
  double lambda = 0.0;  ///< g / omega
};

/// alpha_t = lambda (e^{-i omega t} - 1).
cplx alpha_t(double lambda, double omega_t);

/// C_t = lambda^2 (omega t - sin omega t).
double c_t(double lambda, double omega_t);

/// g = G M m l / (L^2 + l^2/4)^{3/2} / sqrt(2 M omega hbar), lambda = g / omega.
/// DomainError on invalid inputs or when L = l = 0.
Coupling coupling_from_physical(const PhysicalSetup& setup);

/// nbar = k_B T / (2 hbar omega).
double nbar_from_temperature(double temperature, double omega, double hbar, double k_boltzmann);

/// Applies U(t) = e^{-i omega t a^dag a} exp(-sigma_z (alpha_t^* a^dag - alpha_t a) + i C_t)
/// term by term. Qubit |0> displaces the oscillator towards +alpha_t.
HybridDyadState evolve_dyadic(const HybridDyadState& initial, double lambda, double omega_t);

/// initial_state(family) evolved to omega_t. Thermal raises DomainError.
HybridDyadState evolved_state(const ScenarioParams& scenario, double omega_t);

}  // namespace hybridwig
