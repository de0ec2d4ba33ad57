#include "oracles.hpp"
#include "qfridge/fridge.hpp"
#include "qfridge/gate_compiler.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

using namespace qfridge;

namespace {

const double kThetas[] = {0.0, kPi / 8, kPi / 4, 3 * kPi / 8, kPi / 2, 1.0, 2.5};

Matrix product(const std::vector<GateStep>& steps, std::size_t begin, std::size_t end) {
  Matrix u = Matrix::Identity(8, 8);
  for (std::size_t k = begin; k < end; ++k) u = oracle::expm_minus_i(steps[k].generator.matrix(), 1.0) * u;
  return u;
}

double phase_free_fidelity(const Matrix& a, const Matrix& b) { return std::abs((a.adjoint() * b).trace()) / 8.0; }

}  // namespace

TEST(Compile, ShapeAndLabels) {
  const CompiledSequence seq = compile(kPi / 2, 1.0);
  EXPECT_EQ(seq.steps.size(), 40u);
  EXPECT_EQ(seq.term_boundaries, (std::vector<std::size_t>{0, 10, 20, 30, 40}));
  EXPECT_EQ(seq.steps[0].label, "H.H.H@123");
  EXPECT_EQ(seq.steps[10].label, "H.Hy.Hy@123");
  EXPECT_EQ(seq.steps[20].label, "Hy.H.Hy@123");
  EXPECT_EQ(seq.steps[30].label, "Hy.Hy.H@123");
  EXPECT_EQ(seq.steps[3].label, "ZZ(pi/4)@12");
  for (const GateStep& s : seq.steps) {
    EXPECT_EQ(s.duration, 1.0);
    EXPECT_TRUE(s.generator.is_hermitian());
    EXPECT_TRUE(s.unitary().is_unitary());
  }
}

TEST(Compile, RejectsBadInput) {
  EXPECT_THROW(compile(1.0, 0.0), std::invalid_argument);
  EXPECT_THROW(compile(std::nan(""), 1.0), std::invalid_argument);
  EXPECT_THROW(compile(1.0, 1.0, {0, 1, 1, 3}), std::invalid_argument);
}

TEST(Compile, StepsActOnAtMostTwoQubits) {
  for (double theta : kThetas) {
    for (const GateStep& s : compile(theta, 1.3).steps) EXPECT_LE(max_pauli_weight(s.generator), 2u) << s.label;
  }
}

TEST(Compile, EightStepCoreIsTripleZRotation) {
  // Steps 2..9 of a block implement exp(-i phi Z1Z2Z3) with no basis change.
  const Matrix zzz = oracle::kron(oracle::kron(oracle::pauli('Z'), oracle::pauli('Z')), oracle::pauli('Z'));
  for (double theta : kThetas) {
    const CompiledSequence seq = compile(theta, 1.0);
    const double phi = 0.25 * theta;
    EXPECT_NEAR(phase_free_fidelity(product(seq.steps, 1, 9), oracle::expm_minus_i(zzz, phi)), 1.0, 1e-13);
  }
}

TEST(Verify, FidelityAgainstDirectExponential) {
  for (double g : {0.5, 1.0, 2.0}) {
    for (double theta : kThetas) {
      const CompiledSequence seq = compile(theta, g);
      EXPECT_GE(verify(seq, theta), 1.0 - 1e-10) << "theta=" << theta << " g=" << g;
      // Independent check with the Taylor exponential.
      Matrix direct = Matrix::Zero(8, 8);
      direct(2, 5) = direct(5, 2) = g;
      const Matrix target = oracle::expm_minus_i(direct, theta / g);
      EXPECT_NEAR(phase_free_fidelity(product(seq.steps, 0, 40), target), 1.0, 1e-12);
    }
  }
}

TEST(Verify, IdentityAtZeroAngle) {
  const CompiledSequence seq = compile(0.0, 1.0);
  EXPECT_NEAR(verify(seq, 0.0), 1.0, 1e-13);
  const Matrix u = sequence_unitary(seq).matrix();
  EXPECT_NEAR(phase_free_fidelity(u, Matrix::Identity(8, 8)), 1.0, 1e-13);
}

TEST(Verify, SwapsExchangedLevelsAtQuarterTurn) {
  const Operator u = sequence_unitary(compile(kPi / 2, 1.0));
  for (std::size_t k = 0; k < 8; ++k) {
    const std::size_t target = k == kLevel010 ? kLevel101 : k == kLevel101 ? kLevel010 : k;
    EXPECT_NEAR(std::abs(u(target, k)), 1.0, 1e-12) << "basis state " << k;
  }
}

TEST(Verify, SignMutationsAreDetected) {
  const double theta = kPi / 2;
  const CompiledSequence seq = compile(theta, 1.0);
  for (std::size_t k = 0; k < seq.steps.size(); ++k) {
    // exp(+-i (pi/2) P) = +-iP, so negating a basis change or the Y(-pi/2)
    // step only changes the global phase.
    const std::size_t pos = k % kStepsPerTerm;
    if (pos == 0 || pos == 2 || pos == kStepsPerTerm - 1) continue;
    CompiledSequence mutated = seq;
    mutated.steps[k].generator = -1.0 * mutated.steps[k].generator;
    EXPECT_LT(verify(mutated, theta), 1.0 - 1e-6) << "step " << k << " " << seq.steps[k].label;
  }
}

TEST(Verify, AllPositiveTermSignsFail) {
  // With every Pauli coefficient +1/4 the product misses the target by cos(theta/2).
  for (double theta : {kPi / 4, kPi / 2, 1.0}) {
    CompiledSequence seq = compile(theta, 1.0);
    GateStep& core = seq.steps[2 * kStepsPerTerm + 5];  // ZZ(phi)@23 of the YXY block
    core.generator = -1.0 * core.generator;
    EXPECT_NEAR(verify(seq, theta), std::cos(theta / 2), 1e-12);
  }
}

TEST(Verify, BlockOrderIndependence) {
  std::array<std::size_t, kTermCount> order{0, 1, 2, 3};
  const DensityMatrix rho0 = initial_state(paper_config());
  for (double theta : {kPi / 8, kPi / 2}) {
    const DensityMatrix ref = evolve(rho0, sequence_unitary(compile(theta, 1.0)));
    do {
      const CompiledSequence seq = compile(theta, 1.0, order);
      EXPECT_GE(verify(seq, theta), 1.0 - 1e-10);
      const DensityMatrix out = evolve(rho0, sequence_unitary(seq));
      EXPECT_LT((out.matrix() - ref.matrix()).cwiseAbs().maxCoeff(), 1e-10);
    } while (std::next_permutation(order.begin(), order.end()));
  }
}

TEST(MaxPauliWeight, Examples) {
  EXPECT_EQ(max_pauli_weight(Operator::identity(3)), 0u);
  EXPECT_EQ(max_pauli_weight(embed(gates::X(), 1, 3)), 1u);
  EXPECT_EQ(max_pauli_weight(pauli_to_operator(PauliString("ZIZ"))), 2u);
  EXPECT_EQ(max_pauli_weight(build_h_exc(paper_config())), 3u);
  EXPECT_THROW(max_pauli_weight(gates::X()), std::invalid_argument);
}

TEST(RunWithLedger, DefaultConfiguration) {
  const FridgeConfig cfg = paper_config();
  const DensityMatrix rho0 = initial_state(cfg);
  const Operator h = fridge_system_hamiltonian(cfg);
  const LedgerRun run = run_with_ledger(compile(kPi / 2, cfg.g), rho0, h);
  ASSERT_EQ(run.entries.size(), 40u);
  double biggest = 0.0;
  double running = 0.0;
  for (std::size_t k = 0; k < run.entries.size(); ++k) {
    const WorkLedgerEntry& e = run.entries[k];
    EXPECT_EQ(e.step_index, k + 1);
    EXPECT_NEAR(e.dQ1, 0.0, 1e-10);
    running += e.net_work;
    EXPECT_NEAR(e.cumulative_work, running, 1e-12);
    biggest = std::max(biggest, std::abs(e.cumulative_work));
  }
  EXPECT_NEAR(run.entries.back().cumulative_work, 0.0, 1e-9);
  EXPECT_GT(biggest, 1e-3);
  EXPECT_NEAR(internal_energy(run.final_state, h), internal_energy(rho0, h), 1e-10);

  const DensityMatrix direct = exchange_state(rho0, cfg);
  EXPECT_LT((run.final_state.matrix() - direct.matrix()).cwiseAbs().maxCoeff(), 1e-10);
}

TEST(RunWithLedger, MaximallyMixedStateCostsNothing) {
  const Operator h = fridge_system_hamiltonian(paper_config());
  const LedgerRun run = run_with_ledger(compile(1.1, 1.0), DensityMatrix::maximally_mixed(3), h);
  for (const WorkLedgerEntry& e : run.entries) EXPECT_NEAR(e.net_work, 0.0, 1e-13);
}

TEST(RunWithLedger, PerStepWorkMatchesEnergyChangeProperty) {
  oracle::Lcg g(301);
  for (int trial = 0; trial < 10; ++trial) {
    const DensityMatrix rho0{Operator(oracle::random_density(g, 8))};
    const Operator h = system_hamiltonian({1.0, 3.0, 2.0});
    const CompiledSequence seq = compile(g.uniform(0, kPi / 2), 1.0);
    DensityMatrix rho = rho0;
    const LedgerRun run = run_with_ledger(seq, rho0, h);
    for (std::size_t k = 0; k < seq.steps.size(); ++k) {
      const DensityMatrix next = evolve(rho, seq.steps[k].unitary());
      EXPECT_NEAR(run.entries[k].net_work, internal_energy(next, h) - internal_energy(rho, h), 1e-10);
      EXPECT_NEAR(run.entries[k].dQ1, 0.0, 1e-10);
      rho = next;
    }
  }
}
