#pragma once

// Spin thermodynamics in units with k_B = 1 and energies in units of delta.

#include "qfridge/core.hpp"

#include <cstddef>
#include <utility>

namespace qfridge {

/// Two-level spin with ground energy 0 and excited energy `energy`.
struct SpinSpec {
  double energy;
  double temperature;

  SpinSpec(double e, double t);
};

/// Excited-state population e^{-E/T} / (1 + e^{-E/T}).
double excited_population(double energy, double temperature);

/// diag(1/Z, e^{-E/T}/Z).
DensityMatrix thermal_state(const SpinSpec& spec);

enum class TemperatureKind {
  Finite,            // ordinary positive temperature
  Negative,          // population inversion, value < 0
  Infinite,          // P_g == P_e
  Zero,              // P_e == 0
  NegativeZero,      // P_g == 0, fully inverted
};

struct EffectiveTemperature {
  double value;  // +inf, 0.0 and -0.0 for the marker kinds
  TemperatureKind kind;

  bool inverted() const {
    return kind == TemperatureKind::Negative || kind == TemperatureKind::NegativeZero;
  }
};

/// Spin temperature from the diagonal populations of a single-spin state:
/// T = E / ln(P_g / P_e). Coherences are ignored.
EffectiveTemperature effective_temperature(const DensityMatrix& rho1, double energy);

/// -sum lambda ln lambda in nats.
double von_neumann_entropy(const DensityMatrix& rho);

/// tr(rho h_sys).
double internal_energy(const DensityMatrix& rho, const Operator& h_sys);

/// sum_i E_i |1><1|_i on gaps.size() qubits.
Operator system_hamiltonian(const std::vector<double>& gaps);

/// Four-phase work/heat record for one pulse. Units of delta.
struct WorkLedgerEntry {
  std::size_t step_index = 0;
  double dW1 = 0.0;   // switching the control field on
  double dQ1 = 0.0;   // evolution under the constant total Hamiltonian
  double dW2 = 0.0;   // switching it off
  double net_work = 0.0;
  double cumulative_work = 0.0;
};

struct LedgerStep {
  DensityMatrix state;
  WorkLedgerEntry entry;
};

/// Applies exp(-i generator) with control Hamiltonian
/// H_c = generator / duration - h_sys held for `duration`, and books the
/// energy flow. `cumulative_before` is the running work prior to this step.
LedgerStep ledger_step(const DensityMatrix& rho_before, const Operator& generator, double duration,
                       const Operator& h_sys, std::size_t step_index = 0,
                       double cumulative_before = 0.0);

}  // namespace qfridge
