#include "hybridwig/quadrature.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <thread>

#include "hybridwig/errors.hpp"
#include "hybridwig/kernels.hpp"

namespace hybridwig {

void validate(const QuadratureSpec& spec) {
  if (spec.theta_nodes < 8 || spec.phi_nodes < 8 || spec.beta_nodes_per_axis < 8) {
    throw DomainError("QuadratureSpec: node counts must be >= 8");
  }
  if (!(spec.rel_tolerance > 0.0 && spec.rel_tolerance <= 1e-2)) {
    throw DomainError("QuadratureSpec: rel_tolerance must lie in (0, 1e-2]");
  }
  if (spec.beta_radius && !(*spec.beta_radius > 0.0 && std::isfinite(*spec.beta_radius))) {
    throw DomainError("QuadratureSpec: beta_radius must be > 0");
  }
  if (spec.max_refinements < 0) throw DomainError("QuadratureSpec: max_refinements must be >= 0");
}

QuadratureSpec refined(const QuadratureSpec& spec) {
  QuadratureSpec r = spec;
  r.theta_nodes *= 2;
  r.phi_nodes *= 2;
  r.beta_nodes_per_axis *= 2;
  return r;
}

namespace {

Rule1D compute_gauss_legendre(int n) {
  Rule1D r;
  r.nodes.resize(n);
  r.weights.resize(n);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    // Recompute the derivative at the converged root.
    double p0 = 1.0;
    double p1 = x;
    for (int k = 2; k <= n; ++k) {
      const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    dp = n * (x * p1 - p0) / (x * x - 1.0);
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    r.nodes[i] = -x;
    r.nodes[n - 1 - i] = x;
    r.weights[i] = w;
    r.weights[n - 1 - i] = w;
  }
  if (n % 2 == 1) r.nodes[n / 2] = 0.0;
  return r;
}

}  // namespace

const Rule1D& gauss_legendre(int n) {
  if (n < 1) throw DomainError("gauss_legendre: n must be >= 1");
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<Rule1D>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[n];
  if (!slot) slot = std::make_unique<Rule1D>(compute_gauss_legendre(n));
  return *slot;
}

Rule1D composite_gauss_legendre(int n, double lo, double hi) {
  const int order = std::min(n, kPanelOrder);
  const int panels = (n + order - 1) / order;
  const Rule1D& base = gauss_legendre(order);
  const double width = (hi - lo) / panels;
  Rule1D r;
  r.nodes.reserve(static_cast<std::size_t>(panels) * order);
  r.weights.reserve(r.nodes.capacity());
  for (int p = 0; p < panels; ++p) {
    const double mid = lo + (p + 0.5) * width;
    for (int k = 0; k < order; ++k) {
      r.nodes.push_back(mid + 0.5 * width * base.nodes[k]);
      r.weights.push_back(0.5 * width * base.weights[k]);
    }
  }
  return r;
}

Rule1D periodic_trapezoid(int n) {
  Rule1D r;
  r.nodes.resize(n);
  r.weights.assign(n, 2.0 * kPi / n);
  for (int k = 0; k < n; ++k) r.nodes[k] = 2.0 * kPi * k / n;
  return r;
}

void CompensatedSum::add(double x) {
  const double t = sum_ + x;
  if (std::abs(sum_) >= std::abs(x)) {
    carry_ += (sum_ - t) + x;
  } else {
    carry_ += (x - t) + sum_;
  }
  sum_ = t;
}

void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& body) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, count));
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned w = 0; w < threads; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < count; i = next++) {
          try {
            body(i);
          } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure) failure = std::current_exception();
            next = count;
          }
        }
      });
    }
  }
  if (failure) std::rethrow_exception(failure);
}

double ordered_sum(const std::vector<double>& values) {
  CompensatedSum s;
  for (double v : values) s.add(v);
  return s.value();
}

}  // namespace hybridwig
