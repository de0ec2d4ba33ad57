#include "qfridge/fridge.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace qfridge {

namespace {

void require_positive(double v, const char* name) {
  if (!(v > 0.0) || !std::isfinite(v)) {
    throw std::invalid_argument(std::string(name) + " must be positive and finite");
  }
}

void require_self_contained(double E1, double E2, double E3) {
  if (std::abs(E2 - (E1 + E3)) > kSelfContainedTol) {
    std::ostringstream msg;
    msg << "E2 must equal E1+E3 (self-contained condition): got E1=" << E1 << " E2=" << E2
        << " E3=" << E3;
    throw std::invalid_argument(msg.str());
  }
}

double reduced_energy(const DensityMatrix& rho, std::size_t qubit, double gap) {
  return gap * partial_trace(rho, {qubit}).population(1);
}

}  // namespace

void FridgeConfig::validate() const {
  require_positive(E1, "E1");
  require_positive(E2, "E2");
  require_positive(E3, "E3");
  require_positive(T1, "T1");
  require_positive(T2, "T2");
  require_positive(T3, "T3");
  require_positive(g, "g");
  if (!std::isfinite(theta)) throw std::invalid_argument("theta must be finite");
  require_self_contained(E1, E2, E3);
}

Operator fridge_system_hamiltonian(const FridgeConfig& cfg) {
  return system_hamiltonian({cfg.E1, cfg.E2, cfg.E3});
}

Operator build_h_exc(const FridgeConfig& cfg) {
  cfg.validate();
  Matrix m = Matrix::Zero(8, 8);
  m(kLevel010, kLevel101) = cfg.g;
  m(kLevel101, kLevel010) = cfg.g;
  return Operator(std::move(m));
}

std::array<PauliString, 4> h_exc_pauli_terms() {
  // sigma+ sigma- sigma+ + h.c. expanded; the YXY term enters with a minus sign.
  return {PauliString("XXX", 0.25), PauliString("XYY", 0.25), PauliString("YXY", -0.25),
          PauliString("YYX", 0.25)};
}

Operator build_h_exc_pauli(const FridgeConfig& cfg) {
  cfg.validate();
  Operator sum = Operator::zero(3);
  for (PauliString term : h_exc_pauli_terms()) {
    term.coefficient *= cfg.g;
    sum = sum + pauli_to_operator(term);
  }
  return sum;
}

DensityMatrix initial_state(const FridgeConfig& cfg) {
  cfg.validate();
  const Operator rho = kron(kron(thermal_state({cfg.E1, cfg.T1}).op(), thermal_state({cfg.E2, cfg.T2}).op()),
                            thermal_state({cfg.E3, cfg.T3}).op());
  return DensityMatrix(rho);
}

double closed_form_p010(const FridgeConfig& cfg) {
  const double z = (1.0 + std::exp(-cfg.E1 / cfg.T1)) * (1.0 + std::exp(-cfg.E2 / cfg.T2)) *
                   (1.0 + std::exp(-cfg.E3 / cfg.T3));
  return std::exp(-cfg.E2 / cfg.T2) / z;
}

double closed_form_p101(const FridgeConfig& cfg) {
  const double z = (1.0 + std::exp(-cfg.E1 / cfg.T1)) * (1.0 + std::exp(-cfg.E2 / cfg.T2)) *
                   (1.0 + std::exp(-cfg.E3 / cfg.T3));
  return std::exp(-cfg.E1 / cfg.T1 - cfg.E3 / cfg.T3) / z;
}

DensityMatrix exchange_state(const DensityMatrix& rho, const FridgeConfig& cfg) {
  return evolve(rho, herm_exp(build_h_exc(cfg), cfg.theta / cfg.g));
}

ExchangeReport exchange(const FridgeConfig& cfg) {
  const DensityMatrix before = initial_state(cfg);
  const DensityMatrix after = exchange_state(before, cfg);
  const auto gaps = cfg.gaps();

  ExchangeReport r;
  r.P010_before = before.population(kLevel010);
  r.P101_before = before.population(kLevel101);
  r.P010_after = after.population(kLevel010);
  r.P101_after = after.population(kLevel101);

  std::array<double, 3> dq{};
  std::array<EffectiveTemperature, 3> temps{};
  for (std::size_t q = 0; q < 3; ++q) {
    const DensityMatrix reduced = partial_trace(after, {q});
    r.energy_after[q] = gaps[q] * reduced.population(1);
    r.entropy_after[q] = von_neumann_entropy(reduced);
    dq[q] = r.energy_after[q] - reduced_energy(before, q, gaps[q]);
    temps[q] = effective_temperature(reduced, gaps[q]);
  }
  r.dQ1 = dq[0];
  r.dQ2 = dq[1];
  r.dQ3 = dq[2];
  r.T1_after = temps[0];
  r.T2_after = temps[1];
  r.T3_after = temps[2];
  return r;
}

bool working_condition(const FridgeConfig& cfg) {
  cfg.validate();
  return cfg.E1 / cfg.T1 + cfg.E3 / cfg.T3 < cfg.E2 / cfg.T2;
}

double bound_temperature(double E1, double E2, double E3, double T2, double T3) {
  require_positive(E1, "E1");
  require_positive(E2, "E2");
  require_positive(E3, "E3");
  require_positive(T2, "T2");
  require_positive(T3, "T3");
  require_self_contained(E1, E2, E3);
  const double denom = E2 / T2 - E3 / T3;
  if (!(denom > 0.0)) {
    std::ostringstream msg;
    msg << "no cooling regime: E2/T2 - E3/T3 = " << denom << " <= 0";
    throw NoCoolingRegime(msg.str());
  }
  return E1 / denom;
}

double phase_boundary_value(double T2, double T3) {
  require_positive(T2, "T2");
  require_positive(T3, "T3");
  return 6.0 * T3 - 4.0 * T2 - T2 * T3;
}

double cop(const FridgeConfig& cfg) {
  cfg.validate();
  return cfg.E1 / cfg.E3;
}

double dynamic_cop(const FridgeConfig& cfg) {
  const ExchangeReport r = exchange(cfg);
  if (r.dQ3 == 0.0) throw std::domain_error("dynamic_cop: no heat drawn from q3");
  return std::abs(r.dQ1) / std::abs(r.dQ3);
}

double carnot_limit(double T1, double T2, double T3) {
  require_positive(T1, "T1");
  require_positive(T2, "T2");
  require_positive(T3, "T3");
  if (!(T1 <= T2 && T2 < T3)) {
    std::ostringstream msg;
    msg << "carnot_limit: requires T1 <= T2 < T3, got " << T1 << ", " << T2 << ", " << T3;
    throw std::invalid_argument(msg.str());
  }
  if (T1 == T2) return std::numeric_limits<double>::infinity();
  return (T3 - T2) * T1 / (T3 * (T2 - T1));
}

SwapResult two_spin_swap(double E1, double E2, double T0) {
  require_positive(E1, "E1");
  require_positive(E2, "E2");
  require_positive(T0, "T0");
  if (!(E1 < E2)) throw std::invalid_argument("two_spin_swap: requires E1 < E2");

  const DensityMatrix rho(kron(thermal_state({E1, T0}).op(), thermal_state({E2, T0}).op()));
  Matrix swap = Matrix::Zero(4, 4);
  swap(0, 0) = 1.0;
  swap(1, 2) = 1.0;
  swap(2, 1) = 1.0;
  swap(3, 3) = 1.0;
  // exp(-i (pi/2)(I - SWAP)) == SWAP since SWAP has eigenvalues +-1.
  const Operator generator = (kPi / 2.0) * (Operator::identity(2) - Operator(swap));
  const LedgerStep step = ledger_step(rho, generator, 1.0, system_hamiltonian({E1, E2}));
  return {effective_temperature(partial_trace(step.state, {0}), E1), step.entry.net_work};
}

}  // namespace qfridge
