#include "hybridwig/dyadic.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hybridwig/errors.hpp"

namespace hybridwig {

namespace {

constexpr double kPairTolerance = 1e-10;

bool close(cplx a, cplx b, double scale) { return std::abs(a - b) <= kPairTolerance * scale; }

bool is_partner(const DyadTerm& t, const DyadTerm& u) {
  const double scale = std::max(1.0, std::abs(t.coeff));
  return t.qubit.ket == u.qubit.bra && t.qubit.bra == u.qubit.ket &&
         close(t.boson.ket_amp, u.boson.bra_amp, std::max(1.0, std::abs(t.boson.ket_amp))) &&
         close(t.boson.bra_amp, u.boson.ket_amp, std::max(1.0, std::abs(t.boson.bra_amp))) &&
         close(std::conj(t.coeff), u.coeff, scale);
}

bool is_partner(const BosonDyadTerm& t, const BosonDyadTerm& u) {
  const double scale = std::max(1.0, std::abs(t.coeff));
  return close(t.boson.ket_amp, u.boson.bra_amp, std::max(1.0, std::abs(t.boson.ket_amp))) &&
         close(t.boson.bra_amp, u.boson.ket_amp, std::max(1.0, std::abs(t.boson.bra_amp))) &&
         close(std::conj(t.coeff), u.coeff, scale);
}

// Greedy multiset matching of each term with an unused partner.
template <class Term>
std::ptrdiff_t first_unpaired(const std::vector<Term>& terms) {
  std::vector<bool> used(terms.size(), false);
  for (std::size_t k = 0; k < terms.size(); ++k) {
    if (used[k]) continue;
    bool found = false;
    for (std::size_t l = k; l < terms.size(); ++l) {
      if (used[l] && l != k) continue;
      if (is_partner(terms[k], terms[l])) {
        used[k] = true;
        used[l] = true;
        found = true;
        break;
      }
    }
    if (!found) return static_cast<std::ptrdiff_t>(k);
  }
  return -1;
}

void check_qubit_index(int i) {
  if (i != 0 && i != 1) throw DomainError("qubit index must be 0 or 1, got " + std::to_string(i));
}

}  // namespace

QubitState QubitState::pure(double alpha, double chi) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw DomainError("QubitState::pure: alpha must lie in [0, 1], got " + std::to_string(alpha));
  }
  const cplx c0 = std::sqrt(alpha);
  const cplx c1 = std::polar(std::sqrt(1.0 - alpha), chi);
  QubitState q;
  q.rho[0][0] = c0 * std::conj(c0);
  q.rho[0][1] = c0 * std::conj(c1);
  q.rho[1][0] = c1 * std::conj(c0);
  q.rho[1][1] = c1 * std::conj(c1);
  return q;
}

QubitState QubitState::from_bloch(double x, double y, double z) {
  if (x * x + y * y + z * z > 1.0 + 1e-12) {
    throw DomainError("QubitState::from_bloch: Bloch vector longer than 1");
  }
  QubitState q;
  q.rho[0][0] = 0.5 * (1.0 + z);
  q.rho[1][1] = 0.5 * (1.0 - z);
  q.rho[0][1] = 0.5 * cplx(x, -y);
  q.rho[1][0] = 0.5 * cplx(x, y);
  return q;
}

std::array<double, 3> QubitState::bloch() const {
  return {2.0 * rho[1][0].real(), 2.0 * rho[1][0].imag(), (rho[0][0] - rho[1][1]).real()};
}

void check_hermitian(const HybridDyadState& state) {
  for (const auto& t : state.terms) {
    check_qubit_index(t.qubit.ket);
    check_qubit_index(t.qubit.bra);
  }
  if (const auto k = first_unpaired(state.terms); k >= 0) {
    throw HermiticityViolation("dyadic state term " + std::to_string(k) +
                               " has no conjugate-transpose partner");
  }
}

bool is_hermitian(const HybridDyadState& state) {
  try {
    check_hermitian(state);
  } catch (const HermiticityViolation&) {
    return false;
  }
  return true;
}

bool is_hermitian(const BosonDyadState& state) { return first_unpaired(state.terms) < 0; }

cplx trace(const HybridDyadState& state) {
  cplx sum = 0.0;
  for (const auto& t : state.terms) {
    if (t.qubit.ket == t.qubit.bra) sum += t.coeff * coherent_overlap(t.boson.ket_amp, t.boson.bra_amp);
  }
  return sum;
}

cplx trace(const BosonDyadState& state) {
  cplx sum = 0.0;
  for (const auto& t : state.terms) sum += t.coeff * coherent_overlap(t.boson.ket_amp, t.boson.bra_amp);
  return sum;
}

QubitMarginal qubit_marginal(const HybridDyadState& state, cplx beta) {
  cplx m[2][2] = {{0.0, 0.0}, {0.0, 0.0}};
  for (const auto& t : state.terms) {
    m[t.qubit.ket][t.qubit.bra] += t.coeff * boson_kernel_dyad(t.boson.ket_amp, t.boson.bra_amp, beta);
  }
  // Hermitian by pairing; average the two off-diagonal entries.
  return {m[0][0].real(), m[1][1].real(), 0.5 * (m[0][1] + std::conj(m[1][0]))};
}

double wigner_dyadic(const HybridDyadState& state, const PhasePoint& p) {
  validate(p);
  check_hermitian(state);
  const QubitKernel k = qubit_kernel(p.theta, p.phi);
  cplx w = 0.0;
  for (const auto& t : state.terms) {
    w += t.coeff * k[t.qubit.bra][t.qubit.ket] *
         boson_kernel_dyad(t.boson.ket_amp, t.boson.bra_amp, p.beta);
  }
  if (std::abs(w.imag()) > kRealityTolerance) {
    throw HermiticityViolation("wigner_dyadic: imaginary residue " + std::to_string(w.imag()));
  }
  return w.real();
}

double boson_wigner(const BosonDyadState& state, cplx beta) {
  cplx w = 0.0;
  for (const auto& t : state.terms) w += t.coeff * boson_kernel_dyad(t.boson.ket_amp, t.boson.bra_amp, beta);
  return w.real();
}

HybridDyadState from_pure(std::span<const KetComponent> ket) {
  if (ket.empty()) throw DomainError("from_pure: empty ket");
  cplx norm = 0.0;
  for (const auto& k : ket) {
    check_qubit_index(k.qubit);
    for (const auto& l : ket) {
      if (k.qubit == l.qubit) norm += std::conj(l.weight) * k.weight * coherent_overlap(k.amp, l.amp);
    }
  }
  if (!(norm.real() > 0.0)) throw DomainError("from_pure: ket has zero norm");
  const double inv = 1.0 / norm.real();
  HybridDyadState s;
  s.terms.reserve(ket.size() * ket.size());
  for (const auto& k : ket) {
    for (const auto& l : ket) {
      s.terms.push_back({k.weight * std::conj(l.weight) * inv, {k.qubit, l.qubit}, {k.amp, l.amp}});
    }
  }
  return s;
}

BosonDyadState boson_from_pure(std::span<const std::pair<cplx, cplx>> weighted_amps) {
  if (weighted_amps.empty()) throw DomainError("boson_from_pure: empty ket");
  cplx norm = 0.0;
  for (const auto& [wk, ak] : weighted_amps) {
    for (const auto& [wl, al] : weighted_amps) norm += std::conj(wl) * wk * coherent_overlap(ak, al);
  }
  if (!(norm.real() > 0.0)) throw DomainError("boson_from_pure: ket has zero norm");
  BosonDyadState s;
  for (const auto& [wk, ak] : weighted_amps) {
    for (const auto& [wl, al] : weighted_amps) s.terms.push_back({wk * std::conj(wl) / norm.real(), {ak, al}});
  }
  return s;
}

HybridDyadState product(const QubitState& qubit, const BosonDyadState& boson) {
  HybridDyadState s;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      if (qubit.rho[i][j] == cplx(0.0, 0.0)) continue;
      for (const auto& b : boson.terms) s.terms.push_back({qubit.rho[i][j] * b.coeff, {i, j}, b.boson});
    }
  }
  return s;
}

HybridDyadState mixture(std::span<const std::pair<double, HybridDyadState>> parts) {
  double total = 0.0;
  HybridDyadState s;
  for (const auto& [p, part] : parts) {
    if (!(p >= 0.0)) throw DomainError("mixture: weights must be nonnegative");
    total += p;
    for (const auto& t : part.terms) s.terms.push_back({p * t.coeff, t.qubit, t.boson});
  }
  if (std::abs(total - 1.0) > 1e-12) throw DomainError("mixture: weights must sum to 1");
  return s;
}

BosonDyadState branch_state(const HybridDyadState& state, int branch) {
  if (branch != 1 && branch != 2) throw DomainError("branch must be 1 or 2");
  const int q = branch - 1;
  BosonDyadState b;
  for (const auto& t : state.terms) {
    if (t.qubit.ket == q && t.qubit.bra == q) b.terms.push_back({t.coeff, t.boson});
  }
  const cplx tr = trace(b);
  if (!(tr.real() > 0.0)) throw DomainError("branch_state: branch has zero weight");
  for (auto& t : b.terms) t.coeff /= tr.real();
  return b;
}

BosonDyadState boson_initial_state(const ScenarioFamily& family) {
  if (const auto* c = std::get_if<Coherent>(&family)) {
    return BosonDyadState{{{1.0, {c->gamma, c->gamma}}}};
  }
  if (const auto* c = std::get_if<Cat>(&family)) {
    const std::pair<cplx, cplx> ket[] = {{1.0, c->gamma}, {1.0, -c->gamma}};
    return boson_from_pure(ket);
  }
  throw DomainError("thermal oscillator states have no coherent-dyad representation");
}

HybridDyadState initial_state(const ScenarioFamily& family) {
  const QubitState plus = QubitState::pure(0.5, 0.0);
  return product(plus, boson_initial_state(family));
}

double max_kernel_centre(const HybridDyadState& state) {
  double r = 0.0;
  for (const auto& t : state.terms) r = std::max(r, std::abs(0.5 * (t.boson.ket_amp + t.boson.bra_amp)));
  return r;
}

double max_kernel_centre(const BosonDyadState& state) {
  double r = 0.0;
  for (const auto& t : state.terms) r = std::max(r, std::abs(0.5 * (t.boson.ket_amp + t.boson.bra_amp)));
  return r;
}

}  // namespace hybridwig
