#include "hybridwig/phase_space.hpp"

#include <cmath>
#include <string>

#include "hybridwig/errors.hpp"

namespace hybridwig {

namespace {

bool finite(cplx z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

struct FamilyValidator {
  void operator()(const Coherent& c) const {
    if (!finite(c.gamma)) throw DomainError("Coherent: gamma must be finite");
  }
  void operator()(const Thermal& t) const {
    if (!(t.nbar >= 0.0) || !std::isfinite(t.nbar)) {
      throw DomainError("Thermal: nbar must be finite and >= 0, got " + std::to_string(t.nbar));
    }
  }
  void operator()(const Cat& c) const {
    if (!finite(c.gamma)) throw DomainError("Cat: gamma must be finite");
  }
};

}  // namespace

void validate(const ScenarioParams& s) {
  if (!std::isfinite(s.lambda)) throw DomainError("ScenarioParams: lambda must be finite");
  std::visit(FamilyValidator{}, s.family);
}

double cat_normalization(cplx gamma) { return 2.0 + 2.0 * std::exp(-2.0 * std::norm(gamma)); }

double family_amplitude(const ScenarioFamily& f) {
  if (const auto* c = std::get_if<Coherent>(&f)) return std::abs(c->gamma);
  if (const auto* c = std::get_if<Cat>(&f)) return std::abs(c->gamma);
  return 0.0;
}

double family_nbar(const ScenarioFamily& f) {
  if (const auto* t = std::get_if<Thermal>(&f)) return t->nbar;
  return 0.0;
}

const char* family_name(const ScenarioFamily& f) {
  switch (f.index()) {
    case 0: return "coherent";
    case 1: return "thermal";
    default: return "cat";
  }
}

}  // namespace hybridwig
