#pragma once

#include <complex>
#include <variant>
#include <vector>

namespace hybridwig {

using cplx = std::complex<double>;

/// A point of the hybrid phase space: Bloch angles of the qubit kernel and
/// the complex displacement of the oscillator kernel.
///
/// The third Euler angle is absent: the qubit parity commutes with rotations
/// about z, so the kernel does not depend on it.
struct PhasePoint {
  double theta = 0.0;  ///< polar angle, [0, pi]
  double phi = 0.0;    ///< azimuth, [0, 2 pi)
  cplx beta{0.0, 0.0};
};

/// Throws DomainError if the angles are out of range or beta is not finite.
void validate(const PhasePoint& p);

/// |ket><bra| on the qubit, indices in {0, 1}.
struct QubitDyad {
  int ket = 0;
  int bra = 0;
};

/// |ket_amp><bra_amp| between two coherent states.
struct CoherentDyad {
  cplx ket_amp{0.0, 0.0};
  cplx bra_amp{0.0, 0.0};
};

struct DyadTerm {
  cplx coeff{0.0, 0.0};
  QubitDyad qubit;
  CoherentDyad boson;
};

/// Hybrid operator held as a finite sum of qubit-dyad (x) coherent-dyad terms.
///
/// Invariants (checked by check_hermitian / trace): every term has its
/// conjugate-transpose partner in the list, and the trace is one.
struct HybridDyadState {
  std::vector<DyadTerm> terms;
};

struct BosonDyadTerm {
  cplx coeff{0.0, 0.0};
  CoherentDyad boson;
};

/// Oscillator operator as a sum of coherent dyads.
struct BosonDyadState {
  std::vector<BosonDyadTerm> terms;
};

/// One component of a pure hybrid ket: weight * |qubit>|coherent(amp)>.
struct KetComponent {
  cplx weight{1.0, 0.0};
  int qubit = 0;
  cplx amp{0.0, 0.0};
};

/// Initial-state families. The qubit always starts in (|0> + |1>)/sqrt 2.
struct Coherent {
  cplx gamma{0.0, 0.0};
};
struct Thermal {
  double nbar = 0.0;
};
struct Cat {
  cplx gamma{0.0, 0.0};
};

using ScenarioFamily = std::variant<Coherent, Thermal, Cat>;

struct ScenarioParams {
  double lambda = 0.1;
  ScenarioFamily family = Coherent{};
};

/// Throws DomainError for non-finite lambda / gamma or negative nbar.
void validate(const ScenarioParams& s);

/// Even-cat normalisation 2 + 2 exp(-2|gamma|^2) of |gamma> + |-gamma>.
double cat_normalization(cplx gamma);

/// Largest coherent amplitude |gamma| of the family (0 for Thermal).
double family_amplitude(const ScenarioFamily& f);

/// Thermal occupation of the family (0 for pure families).
double family_nbar(const ScenarioFamily& f);

const char* family_name(const ScenarioFamily& f);

}  // namespace hybridwig
