#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "hybridwig/errors.hpp"
#include "hybridwig/fidelity.hpp"
#include "hybridwig/fock_oracle.hpp"
#include "hybridwig/kernels.hpp"
#include "hybridwig/negativity.hpp"
#include "oracles.hpp"

using namespace hybridwig;
using Eigen::MatrixXcd;

TEST(FockOperator, Validation) {
  EXPECT_THROW(FockOperator(3, MatrixXcd::Zero(4, 4)), DomainError);
  EXPECT_THROW(FockOperator(3, MatrixXcd::Zero(3, 4)), DomainError);
  MatrixXcd m = MatrixXcd::Identity(3, 3);
  m(0, 0) = NAN;
  EXPECT_THROW(FockOperator(3, m), DomainError);
  EXPECT_THROW(validate(TruncationSpec{4, 1e-10}), DomainError);
  EXPECT_THROW(validate(TruncationSpec{40, 1e-3}), DomainError);
  EXPECT_THROW(FockOperator(3, MatrixXcd::Identity(3, 3)).block(0, 0), DomainError);
}

TEST(Ladder, MatrixElements) {
  // leading 3x3 block; TruncationSpec needs N >= 8
  const LadderOps l = ladder_ops({8, 1e-10});
  EXPECT_EQ(l.a(0, 1), cplx(1.0));
  EXPECT_NEAR(l.a(1, 2).real(), std::sqrt(2.0), 1e-15);
  EXPECT_EQ(l.a(1, 0), cplx(0.0));
  EXPECT_EQ(l.a(0, 0), cplx(0.0));
  EXPECT_EQ((l.a_dag.matrix() - l.a.matrix().adjoint()).norm(), 0.0);
  const MatrixXcd comm = l.a.matrix() * l.a_dag.matrix() - l.a_dag.matrix() * l.a.matrix();
  EXPECT_LT((comm.topLeftCorner(7, 7) - MatrixXcd::Identity(7, 7)).norm(), 1e-14);
  Eigen::VectorXcd vac = Eigen::VectorXcd::Zero(8);
  vac(0) = 1.0;
  EXPECT_EQ((l.a.matrix() * vac).norm(), 0.0);
}

TEST(Displacement, Properties) {
  const TruncationSpec spec{40, 1e-10};
  EXPECT_LT((displacement(0.0, spec).matrix() - MatrixXcd::Identity(40, 40)).norm(), 1e-14);
  const Eigen::VectorXcd col = displacement(1.0, spec).matrix().col(0);
  double fact = 1.0;
  for (int n = 0; n < 40; ++n) {
    if (n > 0) fact *= n;
    EXPECT_NEAR(std::abs(col(n) - std::exp(-0.5) / std::sqrt(fact)), 0.0, 1e-10);
  }
  const cplx z(0.4, 0.3);
  const MatrixXcd prod = displacement(z, spec).matrix() * displacement(-z, spec).matrix();
  // the product is identity where the cropped operators stay inside the basis
  EXPECT_LT((prod.topLeftCorner(20, 20) - MatrixXcd::Identity(20, 20)).cwiseAbs().maxCoeff(), 1e-9);
  EXPECT_LT((displacement(z, spec).matrix().col(0) - coherent_ket(z, 40)).norm(), 1e-10);
  EXPECT_THROW(displacement(6.0, spec), CutoffInsufficient);
}

TEST(Parity, Properties) {
  const TruncationSpec spec{10, 1e-10};
  const MatrixXcd p = parity(spec).matrix();
  EXPECT_EQ((p * p - MatrixXcd::Identity(10, 10)).norm(), 0.0);
  EXPECT_EQ(p(1, 1), cplx(-1.0));
  MatrixXcd vac = MatrixXcd::Zero(10, 10);
  vac(0, 0) = 1.0;
  EXPECT_EQ((vac * p).trace(), cplx(1.0));
}

TEST(HybridHamiltonian, Structure) {
  const TruncationSpec spec{20, 1e-10};
  const MatrixXcd h0 = hybrid_hamiltonian(0.0, 1.0, spec).matrix();
  for (int k = 0; k < 40; ++k) EXPECT_NEAR(std::abs(h0(k, k) - cplx(k % 20)), 0.0, 1e-13);
  EXPECT_LT((h0 - MatrixXcd(h0.diagonal().asDiagonal())).norm(), 1e-13);

  const MatrixXcd h = hybrid_hamiltonian(0.1, 1.0, spec).matrix();
  EXPECT_EQ((h - h.adjoint()).norm(), 0.0);
  EXPECT_EQ(h.topRightCorner(20, 20).norm(), 0.0);
  EXPECT_EQ(h.bottomLeftCorner(20, 20).norm(), 0.0);
  // sigma_x conjugation swaps the blocks, flipping the sign of the coupling
  const MatrixXcd a = ladder_ops(spec).a.matrix();
  const MatrixXcd coupling = 0.1 * (a + a.adjoint());
  EXPECT_LT((h.bottomRightCorner(20, 20) - h.topLeftCorner(20, 20) + 2 * coupling).norm(), 1e-14);
}

TEST(HybridHamiltonian, GroundEnergy) {
  const TruncationSpec spec{60, 1e-10};
  Eigen::SelfAdjointEigenSolver<MatrixXcd> es(hybrid_hamiltonian(0.1, 1.0, spec).matrix());
  EXPECT_NEAR(es.eigenvalues()(0), -0.01, 1e-8);
  EXPECT_NEAR(es.eigenvalues()(1), -0.01, 1e-8);
}

TEST(EvolveOracle, UnitaryProperties) {
  const ScenarioParams s{0.1, Cat{1.0}};
  const TruncationSpec spec = auto_truncation(s);
  const FockOperator rho0 = initial_density(s.family, spec);
  EXPECT_LT((evolve_oracle(rho0, 0.1, 0.0, spec).matrix() - rho0.matrix()).norm(), 1e-12);
  const FockOperator rho = evolve_oracle(rho0, 0.1, 2.2, spec);
  EXPECT_NEAR((rho.matrix() * rho.matrix()).trace().real(), 1.0, 1e-9);
  EXPECT_NO_THROW(check_density_matrix(rho));

  const TruncationSpec ts = auto_truncation({0.1, Thermal{1.0}});
  const FockOperator th0 = initial_density(Thermal{1.0}, ts);
  const FockOperator th = evolve_oracle(th0, 0.1, 2.2, ts);
  Eigen::SelfAdjointEigenSolver<MatrixXcd> e0(th0.matrix(), Eigen::EigenvaluesOnly), e1(th.matrix(), Eigen::EigenvaluesOnly);
  EXPECT_LT((e0.eigenvalues() - e1.eigenvalues()).cwiseAbs().maxCoeff(), 1e-9);

  const TruncationSpec small{8, 1e-10};
  EXPECT_THROW(evolve_oracle(to_fock(initial_state(Coherent{1.2}), TruncationSpec{30, 1e-10}), 0.1, 1.0, small),
               DomainError);
}

TEST(WignerOracle, Values) {
  const TruncationSpec spec{30, 1e-10};
  MatrixXcd rho = MatrixXcd::Zero(60, 60);
  rho(0, 0) = 0.5;
  rho(30, 30) = 0.5;
  const FockOperator mixed_vac(30, rho);
  std::mt19937_64 rng(61);
  for (int k = 0; k < 5; ++k) {
    auto p = oracle::random_point(rng);
    p.beta = 0.0;
    EXPECT_NEAR(wigner_oracle(mixed_vac, p, spec), 1 / kPi, 1e-12);
  }
  const TruncationSpec t{120, 1e-10};
  EXPECT_NEAR(boson_wigner_oracle(thermal_dm(3.0, t), 0.0, t), 2 / (7 * kPi), 1e-12);
  EXPECT_THROW(boson_wigner_oracle(mixed_vac, 0.0, spec), DomainError);
}

TEST(WignerOracle, KernelCompleteness) {
  const TruncationSpec spec{40, 1e-10};
  MatrixXcd m = MatrixXcd::Zero(40, 40);
  m(0, 0) = 0.7;
  m(1, 1) = 0.3;
  const FockOperator b(40, m);
  QuadratureSpec q;
  q.beta_radius = 3.5;
  q.beta_nodes_per_axis = 32;
  const BosonIntegrals r = integrate_boson(oracle::OracleBosonField(b, spec, 3.5), q);
  EXPECT_NEAR(r.signed_integral, 1.0, 1e-6);
  EXPECT_THROW(boson_wigner_oracle(b, cplx(5.0, 5.0), {8, 1e-10}), CutoffInsufficient);
}

TEST(ThermalDm, Properties) {
  const TruncationSpec spec{120, 1e-10};
  const FockOperator vac = thermal_dm(0.0, spec);
  EXPECT_EQ(vac(0, 0), cplx(1.0));
  EXPECT_EQ(vac.trace(), cplx(1.0));
  const FockOperator th = thermal_dm(3.0, spec);
  const MatrixXcd n = ladder_ops(spec).a_dag.matrix() * ladder_ops(spec).a.matrix();
  EXPECT_NEAR((th.matrix() * n).trace().real(), 3.0, 1e-8);
  EXPECT_LT(std::pow(0.75, 120), 1e-10);
  EXPECT_NO_THROW(check_density_matrix(th));
  EXPECT_THROW(thermal_dm(3.0, {40, 1e-10}), CutoffInsufficient);
  EXPECT_THROW(thermal_dm(-1.0, spec), DomainError);
}

TEST(DensityCheck, Rejects) {
  MatrixXcd m = MatrixXcd::Zero(8, 8);
  m(0, 0) = 1.0;
  EXPECT_NO_THROW(check_density_matrix(FockOperator(8, m)));
  m(0, 1) = 0.1;
  EXPECT_THROW(check_density_matrix(FockOperator(8, m)), NotDensityMatrix);
  m(0, 1) = 0.0;
  m(0, 0) = 0.9;
  EXPECT_THROW(check_density_matrix(FockOperator(8, m)), NotDensityMatrix);
  m(0, 0) = 1.1;
  m(1, 1) = -0.1;
  EXPECT_THROW(check_density_matrix(FockOperator(8, m)), NotDensityMatrix);
}

TEST(AutoCutoff, Values) {
  EXPECT_EQ(auto_cutoff({0.1, Coherent{0.0}}), 23);
  EXPECT_EQ(auto_cutoff({0.1, Cat{1.0}}), 34);
  EXPECT_GE(auto_cutoff({0.1, Thermal{3.0}}), 120);
  EXPECT_THROW(to_fock(initial_state(Coherent{4.0}), TruncationSpec{10, 1e-10}), CutoffInsufficient);
}

TEST(AutoCutoff, DoublingStable) {
  std::mt19937_64 rng(62);
  for (const ScenarioParams& s :
       {ScenarioParams{0.1, Coherent{0.0}}, ScenarioParams{0.1, Thermal{3.0}}, ScenarioParams{0.1, Cat{1.0}}}) {
    const TruncationSpec a = auto_truncation(s);
    const TruncationSpec b{2 * a.cutoff, a.leakage_tol};
    const double wt = 2.1;
    const FockOperator ra = evolve_oracle(initial_density(s.family, a), s.lambda, wt, a);
    const FockOperator rb = evolve_oracle(initial_density(s.family, b), s.lambda, wt, b);
    for (int k = 0; k < 3; ++k) {
      const PhasePoint p = oracle::random_point(rng, 1.5);
      EXPECT_NEAR(wigner_oracle(ra, p, a), wigner_oracle(rb, p, b), 1e-8);
    }
    const SigmaPair sa = build_sigma_pair(s, wt, a), sb = build_sigma_pair(s, wt, b);
    EXPECT_NEAR(uhlmann_fidelity(sa.sigma0, sa.sigma1), uhlmann_fidelity(sb.sigma0, sb.sigma1), 1e-8);
    EXPECT_NEAR(separability_commutator_residual(s, wt, a), separability_commutator_residual(s, wt, b), 1e-8);
  }
}
