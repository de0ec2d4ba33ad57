#pragma once

// Lowering of exp(-i H_exc theta/g) to single- and two-qubit gates.
//
// Each of the four commuting Pauli terms c*ABC (A,B,C in {X,Y}) is realised as
//
//   B exp(-i phi ZZZ) B,   B = b_A (x) b_B (x) b_C,  b_X = H, b_Y = Hy,
//
// and exp(-i phi Z1Z2Z3) uses eight steps around a single ZZ(phi) on qubits
// 2,3, giving ten steps per term and forty in total. Step labels read
// "P(a)@q": exp(-i a P) on qubits q (1-based); "H.Hy.Hy@123" is a basis
// change on all three qubits.

#include "qfridge/core.hpp"
#include "qfridge/thermo.hpp"

#include <array>
#include <string>
#include <vector>

namespace qfridge {

struct GateStep {
  std::string label;
  Operator generator;  // Hermitian, 8x8; the step applies exp(-i generator)
  double duration = 1.0;

  Operator unitary() const { return herm_exp(generator, 1.0); }
};

inline constexpr std::size_t kStepsPerTerm = 10;
inline constexpr std::size_t kTermCount = 4;

struct CompiledSequence {
  std::vector<GateStep> steps;  // time order: steps[0] acts first
  double theta = 0.0;
  double g = 1.0;
  std::vector<std::size_t> term_boundaries;  // {0, 10, 20, 30, 40}
  std::array<std::size_t, kTermCount> term_order{0, 1, 2, 3};
};

/// Compiles with the terms in their natural order XXX, XYY, YXY, YYX.
CompiledSequence compile(double theta, double g);

/// Same, with term blocks emitted in `order` (a permutation of 0..3).
CompiledSequence compile(double theta, double g, const std::array<std::size_t, kTermCount>& order);

/// Ordered product steps[n-1] ... steps[0].
Operator sequence_unitary(const CompiledSequence& seq);

/// |tr(U_seq^dagger U_direct)| / 8 against exp(-i H_exc theta/g).
double verify(const CompiledSequence& seq, double theta);

/// Largest Pauli weight (number of non-identity letters) among the terms of
/// a 3-qubit operator's Pauli expansion, ignoring terms below `tol`.
std::size_t max_pauli_weight(const Operator& op, double tol = 1e-12);

struct LedgerRun {
  DensityMatrix final_state;
  std::vector<WorkLedgerEntry> entries;
};

/// Folds ledger_step over the sequence.
LedgerRun run_with_ledger(const CompiledSequence& seq, const DensityMatrix& rho0, const Operator& h_sys);

}  // namespace qfridge
