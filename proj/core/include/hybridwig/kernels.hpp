#pragma once

#include <array>

#include "hybridwig/phase_space.hpp"

namespace hybridwig {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kSqrt3 = 1.73205080756887729353;

/// Negativity volume of every pure qubit state, 1/sqrt3 - 1/2.
inline constexpr double kPureQubitVolume = 1.0 / kSqrt3 - 0.5;

/// 2x2 Stratonovich-Weyl kernel U Pi U^dagger for the qubit, with
/// Pi = (1 - sqrt3 sigma_z)/2 and U = exp(i phi sz/2) exp(i theta sy/2).
using QubitKernel = std::array<std::array<cplx, 2>, 2>;

QubitKernel qubit_kernel(double theta, double phi);

/// <i| U Pi U^dagger |j>.
cplx qubit_kernel_element(int i, int j, double theta, double phi);

/// (2/pi) <bra| D(beta) Pi D(beta)^dagger |ket> for coherent |ket>, |bra>.
///
/// Closed form: (2/pi) exp(-2|beta - (k+b)/2|^2) exp(i[2 Im(beta^*(k-b)) + Im(k^* b)]).
cplx boson_kernel_dyad(cplx ket_amp, cplx bra_amp, cplx beta);

/// <bra|ket> for coherent states.
cplx coherent_overlap(cplx ket_amp, cplx bra_amp);

/// Wigner function of sqrt(a)|0> + e^{i chi} sqrt(1-a)|1> on the Bloch sphere.
double qubit_wigner_pure(double alpha, double chi, double theta, double phi);

/// Qubit operator M(beta) = Tr_b[rho (1 (x) Delta_b(beta))], Hermitian.
///
/// The hybrid Wigner function at (theta, phi, beta) is Tr[M Delta_q(theta, phi)],
/// so M carries everything needed to integrate over the sphere analytically.
struct QubitMarginal {
  double m00 = 0.0;
  double m11 = 0.0;
  cplx m01{0.0, 0.0};  ///< <0|M|1>; <1|M|0> is its conjugate.
};

/// Tr[M Delta_q(theta, phi)].
double wigner_from_marginal(const QubitMarginal& m, double theta, double phi);

/// W restricted to the sphere is offset + amplitude * (unit vector . n).
struct SphereProfile {
  double offset = 0.0;
  double amplitude = 0.0;  ///< >= 0
};

SphereProfile sphere_profile(const QubitMarginal& m);

/// Integral of |offset + amplitude u| over the Bloch sphere with the measure
/// sin(theta) dtheta dphi / (2 pi), i.e. the u-integral over [-1, 1].
double sphere_abs_integral(const SphereProfile& s);

}  // namespace hybridwig
