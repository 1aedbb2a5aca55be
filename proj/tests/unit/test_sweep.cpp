#include <gtest/gtest.h>

#include <cmath>

#include "hybridwig/errors.hpp"
#include "hybridwig/negativity.hpp"
#include "hybridwig/sweep.hpp"

using namespace hybridwig;

namespace {

SweepConfig small(ScenarioFamily fam, int steps = 9) {
  SweepConfig c;
  c.scenario = {0.1, fam};
  c.t_max_over_pi = 4.0;
  c.t_steps = steps;
  return c;
}

}  // namespace

TEST(Sweep, Validation) {
  SweepConfig c = small(Coherent{});
  c.t_steps = 1;
  EXPECT_THROW(validate(c), DomainError);
  c = small(Coherent{});
  c.t_max_over_pi = 0.0;
  EXPECT_THROW(validate(c), DomainError);
  c = small(Thermal{-1.0});
  EXPECT_THROW(run_sweep(c), DomainError);
}

TEST(Sweep, GridIncludesEndpoints) {
  SweepConfig c = small(Coherent{}, 161);
  EXPECT_EQ(grid_time_over_pi(c, 0), 0.0);
  EXPECT_EQ(grid_time_over_pi(c, 80), 2.0);
  EXPECT_EQ(grid_time_over_pi(c, 160), 4.0);
}

TEST(Sweep, RowsConsistent) {
  for (ScenarioFamily fam : {ScenarioFamily{Coherent{}}, ScenarioFamily{Thermal{3.0}}, ScenarioFamily{Cat{1.0}}}) {
    const auto rows = run_sweep(small(fam));
    ASSERT_EQ(rows.size(), 9u);
    for (const SweepRow& r : rows) {
      EXPECT_EQ(r.witnessed_entangled, r.negativity_volume > r.critical_value + r.negativity_err);
      EXPECT_EQ(r.witnessed_entangled, 1.0 - r.fidelity > 1e-6) << r.omega_t_over_pi;
      const double tau = r.omega_t_over_pi;
      if (tau == 0.0 || tau == 2.0 || tau == 4.0) {
        EXPECT_NEAR(r.fidelity, 1.0, 1e-10);
        EXPECT_FALSE(r.witnessed_entangled);
      }
    }
  }
}

TEST(Sweep, CoherentFirstRow) {
  const auto rows = run_sweep(small(Coherent{}, 5));
  EXPECT_NEAR(rows[0].negativity_volume, 0.07735, 1e-5);
  EXPECT_FALSE(rows[0].witnessed_entangled);
}

TEST(Sweep, DeterministicAcrossThreads) {
  SweepConfig a = small(Cat{1.0}, 5), b = a;
  a.quad.threads = 1;
  b.quad.threads = 3;
  const auto ra = run_sweep(a), rb = run_sweep(b);
  for (std::size_t i = 0; i < ra.size(); ++i) {
    EXPECT_EQ(ra[i].negativity_volume, rb[i].negativity_volume);
    EXPECT_EQ(ra[i].critical_value, rb[i].critical_value);
    EXPECT_EQ(ra[i].negativity_err, rb[i].negativity_err);
  }
}

TEST(Sweep, OracleChecksPass) {
  for (ScenarioFamily fam : {ScenarioFamily{Coherent{}}, ScenarioFamily{Thermal{3.0}}, ScenarioFamily{Cat{1.0}}}) {
    SweepConfig c = small(fam, 3);
    c.t_max_over_pi = 1.0;
    c.oracle_checks = true;
    EXPECT_NO_THROW(run_sweep(c));
  }
}
