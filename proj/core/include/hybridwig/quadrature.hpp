#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

namespace hybridwig {

/// How the Bloch-sphere part of a hybrid integral is done.
enum class SphereRule {
  /// The integrand is affine in the unit vector on the sphere, so the
  /// sphere integral of |W| has a closed form; only the beta plane is
  /// discretised.
  Exact,
  /// Gauss-Legendre in cos(theta) times periodic trapezoid in phi.
  Tensor,
};

/// Discretisation of the measure dphi dtheta d^2beta sin(theta)/(2 pi).
struct QuadratureSpec {
  int theta_nodes = 48;
  int phi_nodes = 64;
  std::optional<double> beta_radius;  ///< half-width of the beta square; nullopt = auto
  int beta_nodes_per_axis = 96;
  double rel_tolerance = 1e-4;
  SphereRule sphere_rule = SphereRule::Exact;
  /// Number of node doublings tried before QuadratureNonConvergence.
  int max_refinements = 4;
  /// Worker threads for the beta rows; 0 = hardware concurrency.
  unsigned threads = 0;
};

/// DomainError unless node counts >= 8, rel_tolerance in (0, 1e-2],
/// beta_radius > 0 when set and max_refinements >= 0.
void validate(const QuadratureSpec& spec);

/// Spec with every node count doubled.
QuadratureSpec refined(const QuadratureSpec& spec);

struct Rule1D {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// n-point Gauss-Legendre rule on [-1, 1] (Newton on the three-term
/// recurrence). Cached; safe to call concurrently.
const Rule1D& gauss_legendre(int n);

/// Composite Gauss-Legendre on [lo, hi] with at least n nodes, in panels of
/// kPanelOrder points (a single n-point panel when n < kPanelOrder).
Rule1D composite_gauss_legendre(int n, double lo, double hi);
inline constexpr int kPanelOrder = 16;

/// Periodic trapezoid on [0, 2 pi).
Rule1D periodic_trapezoid(int n);

/// Neumaier-compensated accumulator.
class CompensatedSum {
 public:
  void add(double x);
  double value() const { return sum_ + carry_; }

 private:
  double sum_ = 0.0;
  double carry_ = 0.0;
};

/// Runs body(i) for i in [0, count) on up to `threads` workers. Each index is
/// visited exactly once; callers write results by index, so the outcome does
/// not depend on scheduling.
void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& body);

/// Sum of per-index values in index order (compensated).
double ordered_sum(const std::vector<double>& values);

}  // namespace hybridwig
