#include "oracles.hpp"
#include "qfridge/fridge.hpp"
#include "qfridge/thermo.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace qfridge;

TEST(ThermalState, Examples) {
  const DensityMatrix hot = thermal_state({1.0, 1e9});
  EXPECT_NEAR(hot.population(0), 0.5, 1e-8);
  EXPECT_NEAR(hot.population(1), 0.5, 1e-8);

  EXPECT_NEAR(thermal_state({2.0, 4.0}).population(1), 0.3775406687981454, 1e-12);

  const DensityMatrix cold = thermal_state({1.0, 1e-4});
  EXPECT_NEAR(cold.population(0), 1.0, 1e-12);
  EXPECT_NEAR(cold.population(1), 0.0, 1e-12);
}

TEST(SpinSpec, RejectsNonPositive) {
  EXPECT_THROW(SpinSpec(0.0, 1.0), std::invalid_argument);
  EXPECT_THROW(SpinSpec(1.0, -1.0), std::invalid_argument);
  EXPECT_THROW(SpinSpec(1.0, std::nan("")), std::invalid_argument);
}

TEST(EffectiveTemperature, Examples) {
  const double pe = 0.3775406687981454;
  const DensityMatrix rho{Operator::diagonal({1 - pe, pe})};
  const EffectiveTemperature t = effective_temperature(rho, 2.0);
  EXPECT_EQ(t.kind, TemperatureKind::Finite);
  EXPECT_NEAR(t.value, 4.0, 1e-9);

  const EffectiveTemperature inf = effective_temperature(DensityMatrix::maximally_mixed(1), 1.0);
  EXPECT_EQ(inf.kind, TemperatureKind::Infinite);
  EXPECT_TRUE(std::isinf(inf.value));

  const EffectiveTemperature neg = effective_temperature(DensityMatrix(Operator::diagonal({0.3, 0.7})), 1.0);
  EXPECT_EQ(neg.kind, TemperatureKind::Negative);
  EXPECT_TRUE(neg.inverted());
  EXPECT_LT(neg.value, 0.0);
}

TEST(EffectiveTemperature, Markers) {
  const EffectiveTemperature zero = effective_temperature(DensityMatrix::basis_state(1, 0), 1.0);
  EXPECT_EQ(zero.kind, TemperatureKind::Zero);
  EXPECT_EQ(zero.value, 0.0);
  EXPECT_FALSE(std::signbit(zero.value));

  const EffectiveTemperature nzero = effective_temperature(DensityMatrix::basis_state(1, 1), 1.0);
  EXPECT_EQ(nzero.kind, TemperatureKind::NegativeZero);
  EXPECT_TRUE(std::signbit(nzero.value));
  EXPECT_TRUE(nzero.inverted());
}

TEST(EffectiveTemperature, RoundTripProperty) {
  oracle::Lcg g(101);
  for (int trial = 0; trial < 2000; ++trial) {
    const double t = std::exp(g.uniform(std::log(0.1), std::log(100.0)));
    const double e = g.uniform(0.5, 5.0);
    const EffectiveTemperature back = effective_temperature(thermal_state({e, t}), e);
    ASSERT_EQ(back.kind, TemperatureKind::Finite);
    EXPECT_NEAR(back.value, t, 1e-9 * std::max(1.0, t)) << "E=" << e << " T=" << t;
  }
}

TEST(Entropy, Examples) {
  EXPECT_NEAR(von_neumann_entropy(DensityMatrix::basis_state(2, 3)), 0.0, 1e-15);
  EXPECT_NEAR(von_neumann_entropy(DensityMatrix::maximally_mixed(1)), std::log(2.0), 1e-15);
  // Binary entropy of 0.3775406687981454; an earlier hand estimate of 0.661563
  // does not survive direct evaluation.
  const double s = von_neumann_entropy(thermal_state({2.0, 4.0}));
  EXPECT_NEAR(s, 0.6628473185791794, 1e-12);
  EXPECT_NEAR(s, oracle::binary_entropy(oracle::excited(2.0, 4.0)), 1e-14);
}

TEST(Entropy, BoundedAndUnitarilyInvariant) {
  oracle::Lcg g(103);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + trial % 3;
    const int dim = 1 << n;
    const DensityMatrix rho{Operator(oracle::random_density(g, dim))};
    const double s = von_neumann_entropy(rho);
    EXPECT_GE(s, -1e-15);
    EXPECT_LE(s, n * std::log(2.0) + 1e-12);
    const Operator u = herm_exp(Operator(oracle::random_hermitian(g, dim)), g.uniform(-4, 4));
    EXPECT_NEAR(von_neumann_entropy(evolve(rho, u)), s, 1e-10);
  }
}

TEST(InternalEnergy, Examples) {
  const Operator h = system_hamiltonian({1.0, 3.0, 2.0});
  EXPECT_NEAR(internal_energy(DensityMatrix::basis_state(3, 0), h), 0.0, 1e-15);
  EXPECT_NEAR(internal_energy(DensityMatrix::basis_state(3, 7), h), 6.0, 1e-15);

  const DensityMatrix rho0 = initial_state(paper_config());
  const double u = internal_energy(rho0, h);
  EXPECT_NEAR(u, 1.8251492455922587, 1e-12);
  EXPECT_NEAR(u, 1.825151, 1e-5);
  const double by_spin =
      1 * oracle::excited(1, 2) + 3 * oracle::excited(3, 2) + 2 * oracle::excited(2, 10);
  EXPECT_NEAR(u, by_spin, 1e-14);
}

TEST(InternalEnergy, DimensionMismatch) {
  EXPECT_THROW(internal_energy(DensityMatrix::maximally_mixed(2), system_hamiltonian({1.0, 3.0, 2.0})),
               std::invalid_argument);
}

TEST(SystemHamiltonian, MostSignificantQubitFirst) {
  const Operator h = system_hamiltonian({1.0, 3.0, 2.0});
  EXPECT_NEAR(h(4, 4).real(), 1.0, 1e-15);  // |100>
  EXPECT_NEAR(h(2, 2).real(), 3.0, 1e-15);  // |010>
  EXPECT_NEAR(h(1, 1).real(), 2.0, 1e-15);  // |001>
  EXPECT_NEAR(h(2, 2).real(), h(5, 5).real(), 1e-15);
}

TEST(LedgerStep, ZeroGeneratorIsIdentity) {
  const DensityMatrix rho0 = initial_state(paper_config());
  const Operator h = system_hamiltonian({1.0, 3.0, 2.0});
  const LedgerStep s = ledger_step(rho0, Operator::zero(3), 1.0, h);
  EXPECT_LT((s.state.matrix() - rho0.matrix()).cwiseAbs().maxCoeff(), 1e-15);
  // A zero generator still switches a control field -h_sys on and off.
  EXPECT_NEAR(s.entry.dQ1, 0.0, 1e-15);
  EXPECT_NEAR(s.entry.net_work, 0.0, 1e-15);
  EXPECT_NEAR(s.entry.dW1 + s.entry.dW2, 0.0, 1e-15);
}

TEST(LedgerStep, CommutingGeneratorOnDiagonalStateCostsNothing) {
  const DensityMatrix rho0 = initial_state(paper_config());
  const Operator h = system_hamiltonian({1.0, 3.0, 2.0});
  const Operator gen = 0.7 * embed(gates::Z(), 1, 3);
  const LedgerStep s = ledger_step(rho0, gen, 1.0, h);
  EXPECT_NEAR(s.entry.net_work, 0.0, 1e-14);
}

TEST(LedgerStep, RejectsBadInputs) {
  const DensityMatrix rho = DensityMatrix::maximally_mixed(1);
  Matrix m = Matrix::Zero(2, 2);
  m(0, 1) = 1.0;
  EXPECT_THROW(ledger_step(rho, Operator(m), 1.0, gates::Z()), std::invalid_argument);
  EXPECT_THROW(ledger_step(rho, gates::X(), 0.0, gates::Z()), std::invalid_argument);
}

TEST(LedgerStep, IdentityAndZeroHeatProperty) {
  oracle::Lcg g(107);
  for (int trial = 0; trial < 200; ++trial) {
    const DensityMatrix rho{Operator(oracle::random_density(g, 8))};
    const Operator h = system_hamiltonian({g.uniform(0.5, 3), g.uniform(0.5, 3), g.uniform(0.5, 3)});
    const Operator gen(oracle::random_hermitian(g, 8));
    const double duration = g.uniform(0.2, 3.0);
    const LedgerStep s = ledger_step(rho, gen, duration, h, 4, 0.25);
    const WorkLedgerEntry& e = s.entry;
    EXPECT_EQ(e.step_index, 4u);
    EXPECT_NEAR(e.dQ1, 0.0, 1e-10);
    EXPECT_NEAR(e.net_work, e.dW1 + e.dQ1 + e.dW2, 1e-12);
    EXPECT_NEAR(e.net_work, internal_energy(s.state, h) - internal_energy(rho, h), 1e-10);
    EXPECT_NEAR(e.cumulative_work, 0.25 + e.net_work, 1e-12);
    // The realised unitary is exp(-i generator) whatever the duration.
    const DensityMatrix direct = evolve(rho, herm_exp(gen, 1.0));
    EXPECT_LT((s.state.matrix() - direct.matrix()).cwiseAbs().maxCoeff(), 1e-12);
  }
}

TEST(HeatConservation, ConstantHamiltonianProperty) {
  oracle::Lcg g(109);
  for (int trial = 0; trial < 200; ++trial) {
    const int dim = 1 << (1 + trial % 3);
    const DensityMatrix rho{Operator(oracle::random_density(g, dim))};
    const Operator h(oracle::random_hermitian(g, dim));
    const DensityMatrix out = evolve(rho, herm_exp(h, g.uniform(-6, 6)));
    EXPECT_NEAR(expectation(out, h), expectation(rho, h), 1e-11);
  }
}
