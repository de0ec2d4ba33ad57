#include "qfridge/thermo.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace qfridge {

SpinSpec::SpinSpec(double e, double t) : energy(e), temperature(t) {
  if (!(e > 0.0) || !std::isfinite(e)) {
    throw std::invalid_argument("SpinSpec: energy gap must be positive and finite");
  }
  if (!(t > 0.0) || !std::isfinite(t)) {
    throw std::invalid_argument("SpinSpec: temperature must be positive and finite");
  }
}

double excited_population(double energy, double temperature) {
  const double x = energy / temperature;
  // exp(-x)/(1+exp(-x)) for x >= 0; the other branch avoids overflow.
  if (x >= 0.0) {
    const double b = std::exp(-x);
    return b / (1.0 + b);
  }
  return 1.0 / (1.0 + std::exp(x));
}

DensityMatrix thermal_state(const SpinSpec& spec) {
  const double pe = excited_population(spec.energy, spec.temperature);
  return DensityMatrix(Operator::diagonal({1.0 - pe, pe}));
}

EffectiveTemperature effective_temperature(const DensityMatrix& rho1, double energy) {
  if (rho1.dim() != 2) throw std::invalid_argument("effective_temperature: expected a single-spin state");
  if (!(energy > 0.0)) throw std::invalid_argument("effective_temperature: energy must be positive");
  const double pg = rho1.population(0);
  const double pe = rho1.population(1);
  constexpr double inf = std::numeric_limits<double>::infinity();
  if (pe <= 0.0) return {0.0, TemperatureKind::Zero};
  if (pg <= 0.0) return {-0.0, TemperatureKind::NegativeZero};
  if (pg == pe) return {inf, TemperatureKind::Infinite};
  const double t = energy / std::log(pg / pe);
  if (t < 0.0) return {t, TemperatureKind::Negative};
  return {t, TemperatureKind::Finite};
}

double von_neumann_entropy(const DensityMatrix& rho) {
  double s = 0.0;
  for (double lambda : eigenvalues(rho.op())) {
    if (lambda > 0.0) s -= lambda * std::log(lambda);
  }
  return s;
}

double internal_energy(const DensityMatrix& rho, const Operator& h_sys) {
  if (rho.dim() != h_sys.dim()) {
    std::ostringstream msg;
    msg << "internal_energy: dimension mismatch (" << rho.dim() << " vs " << h_sys.dim() << ")";
    throw std::invalid_argument(msg.str());
  }
  return expectation(rho, h_sys);
}

Operator system_hamiltonian(const std::vector<double>& gaps) {
  if (gaps.empty() || gaps.size() > kMaxQubits) {
    throw std::invalid_argument("system_hamiltonian: need 1.." + std::to_string(kMaxQubits) + " gaps");
  }
  const std::size_t n = gaps.size();
  const std::size_t d = std::size_t{1} << n;
  std::vector<double> diag(d, 0.0);
  for (std::size_t index = 0; index < d; ++index) {
    for (std::size_t q = 0; q < n; ++q) {
      if ((index >> (n - 1 - q)) & 1U) diag[index] += gaps[q];
    }
  }
  return Operator::diagonal(diag);
}

LedgerStep ledger_step(const DensityMatrix& rho_before, const Operator& generator, double duration,
                       const Operator& h_sys, std::size_t step_index, double cumulative_before) {
  if (!generator.is_hermitian()) throw std::invalid_argument("ledger_step: generator is not Hermitian");
  if (!(duration > 0.0)) throw std::invalid_argument("ledger_step: duration must be positive");
  if (generator.dim() != rho_before.dim() || h_sys.dim() != rho_before.dim()) {
    throw std::invalid_argument("ledger_step: dimension mismatch");
  }

  const Operator total = (1.0 / duration) * generator;
  const Operator control = total - h_sys;
  DensityMatrix after = evolve(rho_before, herm_exp(total, duration));

  WorkLedgerEntry e;
  e.step_index = step_index;
  e.dW1 = expectation(rho_before, control);
  e.dQ1 = expectation(after, total) - expectation(rho_before, total);
  e.dW2 = -expectation(after, control);
  e.net_work = e.dW1 + e.dQ1 + e.dW2;
  e.cumulative_work = cumulative_before + e.net_work;
  return {std::move(after), e};
}

}  // namespace qfridge
