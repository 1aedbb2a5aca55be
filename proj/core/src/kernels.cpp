#include "hybridwig/kernels.hpp"

#include <cmath>
#include <string>

#include "hybridwig/errors.hpp"

namespace hybridwig {

void validate(const PhasePoint& p) {
  if (!(p.theta >= 0.0 && p.theta <= kPi)) {
    throw DomainError("PhasePoint: theta must lie in [0, pi], got " + std::to_string(p.theta));
  }
  if (!(p.phi >= 0.0 && p.phi < 2.0 * kPi)) {
    throw DomainError("PhasePoint: phi must lie in [0, 2pi), got " + std::to_string(p.phi));
  }
  if (!std::isfinite(p.beta.real()) || !std::isfinite(p.beta.imag())) {
    throw DomainError("PhasePoint: beta must be finite");
  }
}

QubitKernel qubit_kernel(double theta, double phi) {
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  const cplx e = std::polar(1.0, phi);
  const double h = 0.5 * kSqrt3 * s;
  QubitKernel k;
  k[0][0] = 0.5 * (1.0 - kSqrt3 * c);
  k[1][1] = 0.5 * (1.0 + kSqrt3 * c);
  k[0][1] = h * e;
  k[1][0] = h * std::conj(e);
  return k;
}

cplx qubit_kernel_element(int i, int j, double theta, double phi) {
  if ((i != 0 && i != 1) || (j != 0 && j != 1)) {
    throw DomainError("qubit_kernel_element: indices must be 0 or 1");
  }
  return qubit_kernel(theta, phi)[i][j];
}

cplx boson_kernel_dyad(cplx ket_amp, cplx bra_amp, cplx beta) {
  const cplx centre = 0.5 * (ket_amp + bra_amp);
  const double gauss = -2.0 * std::norm(beta - centre);
  const double phase = 2.0 * std::imag(std::conj(beta) * (ket_amp - bra_amp)) +
                       std::imag(std::conj(ket_amp) * bra_amp);
  return (2.0 / kPi) * std::exp(gauss) * std::polar(1.0, phase);
}

cplx coherent_overlap(cplx ket_amp, cplx bra_amp) {
  return std::exp(-0.5 * std::norm(ket_amp) - 0.5 * std::norm(bra_amp) +
                  std::conj(bra_amp) * ket_amp);
}

double qubit_wigner_pure(double alpha, double chi, double theta, double phi) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw DomainError("qubit_wigner_pure: alpha must lie in [0, 1], got " + std::to_string(alpha));
  }
  return std::sqrt(3.0 * alpha * (1.0 - alpha)) * std::sin(theta) * std::cos(chi + phi) +
         0.5 * kSqrt3 * (1.0 - 2.0 * alpha) * std::cos(theta) + 0.5;
}

double wigner_from_marginal(const QubitMarginal& m, double theta, double phi) {
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  // Tr[M Delta] = m00 D00 + m11 D11 + 2 Re(m01 D10), D10 = (sqrt3/2) s e^{-i phi}.
  return 0.5 * (m.m00 + m.m11) - 0.5 * kSqrt3 * (m.m00 - m.m11) * c +
         kSqrt3 * s * std::real(m.m01 * std::polar(1.0, -phi));
}

SphereProfile sphere_profile(const QubitMarginal& m) {
  const double dz = m.m00 - m.m11;
  return {0.5 * (m.m00 + m.m11), 0.5 * kSqrt3 * std::sqrt(dz * dz + 4.0 * std::norm(m.m01))};
}

double sphere_abs_integral(const SphereProfile& s) {
  const double a = std::abs(s.offset);
  const double b = s.amplitude;
  if (a >= b) return 2.0 * a;
  // Nodal circle inside the sphere: split the u-integral at u = -offset/b.
  return (a * a + b * b) / b;
}

}  // namespace hybridwig
