#pragma once

// Three-spin self-contained refrigerator: q1 is the target, q2 couples to
// the cold bath, q3 to the hot bath. Heat sign convention: dQ_i > 0 means
// spin i absorbs energy, so cooling q1 shows up as dQ1 < 0.

#include "qfridge/core.hpp"
#include "qfridge/thermo.hpp"

#include <array>
#include <stdexcept>

namespace qfridge {

// Basis indices of the two degenerate levels under the MSB-first ordering.
inline constexpr std::size_t kLevel010 = 2;
inline constexpr std::size_t kLevel101 = 5;

inline constexpr double kPi = 3.14159265358979323846;

/// Energy gaps (delta), temperatures (delta/k_B), coupling g and the
/// dimensionless evolution angle theta = g t.
struct FridgeConfig {
  double E1 = 1.0;
  double E2 = 3.0;
  double E3 = 2.0;
  double T1 = 2.0;
  double T2 = 2.0;
  double T3 = 10.0;
  double g = 1.0;
  double theta = kPi / 2.0;

  /// Throws std::invalid_argument naming the violated invariant.
  void validate() const;

  std::array<double, 3> gaps() const { return {E1, E2, E3}; }
  std::array<double, 3> temperatures() const { return {T1, T2, T3}; }
};

/// The configuration of the reference experiment.
inline FridgeConfig paper_config() { return FridgeConfig{}; }

/// Tolerance of the degeneracy condition E2 = E1 + E3.
inline constexpr double kSelfContainedTol = 1e-12;

class NoCoolingRegime : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

struct ExchangeReport {
  double P010_before = 0.0;
  double P101_before = 0.0;
  double P010_after = 0.0;
  double P101_after = 0.0;
  double dQ1 = 0.0;
  double dQ2 = 0.0;
  double dQ3 = 0.0;
  EffectiveTemperature T1_after{0.0, TemperatureKind::Finite};
  EffectiveTemperature T2_after{0.0, TemperatureKind::Finite};
  EffectiveTemperature T3_after{0.0, TemperatureKind::Finite};
  // Per-spin energy tr(H_i rho_i) and entropy after the exchange.
  std::array<double, 3> energy_after{};
  std::array<double, 3> entropy_after{};
};

/// H_sys = sum_i E_i |1><1|_i on three qubits.
Operator fridge_system_hamiltonian(const FridgeConfig& cfg);

/// g (|010><101| + |101><010|).
Operator build_h_exc(const FridgeConfig& cfg);

/// The same operator from its four-term Pauli expansion.
Operator build_h_exc_pauli(const FridgeConfig& cfg);

/// Pauli strings of the expansion with their coefficients (units of g).
std::array<PauliString, 4> h_exc_pauli_terms();

/// Product of the three thermal states.
DensityMatrix initial_state(const FridgeConfig& cfg);

/// Closed-form populations of |010> and |101> in the initial state.
double closed_form_p010(const FridgeConfig& cfg);
double closed_form_p101(const FridgeConfig& cfg);

/// Joint state after exp(-i H_exc theta/g) acting on `rho`.
DensityMatrix exchange_state(const DensityMatrix& rho, const FridgeConfig& cfg);

ExchangeReport exchange(const FridgeConfig& cfg);

/// E1/T1 + E3/T3 < E2/T2 (strict).
bool working_condition(const FridgeConfig& cfg);

/// E1 / (E2/T2 - E3/T3); throws NoCoolingRegime when the denominator is <= 0.
double bound_temperature(double E1, double E2, double E3, double T2, double T3);

/// 6 T3 - 4 T2 - T2 T3: positive exactly when cooling works at
/// E = (1,3,2), T1 = 2.
double phase_boundary_value(double T2, double T3);

/// Coefficient of performance E1/E3.
double cop(const FridgeConfig& cfg);

/// |dQ1| / |dQ3| measured from a simulated exchange.
double dynamic_cop(const FridgeConfig& cfg);

/// (T3 - T2) T1 / (T3 (T2 - T1)); +inf when T1 == T2. Requires T1 <= T2 < T3.
double carnot_limit(double T1, double T2, double T3);

struct SwapResult {
  EffectiveTemperature T1_after;
  double work;  // energy injected by the SWAP, > 0 for E1 < E2
};

/// SWAP of two thermal spins at common temperature T0.
SwapResult two_spin_swap(double E1, double E2, double T0);

}  // namespace qfridge
