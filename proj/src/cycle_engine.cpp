#include "qfridge/cycle_engine.hpp"

#include <cmath>

namespace qfridge {

namespace {

CycleRecord snapshot(const DensityMatrix& rho, const FridgeConfig& cfg, std::size_t n, double theta) {
  const DensityMatrix q1 = partial_trace(rho, {0});
  CycleRecord r;
  r.n = n;
  r.theta = theta;
  r.T1 = effective_temperature(q1, cfg.E1).value;
  r.entropy_q1 = von_neumann_entropy(q1);
  r.energy_q1 = cfg.E1 * q1.population(1);
  return r;
}

}  // namespace

DensityMatrix reset_baths(const DensityMatrix& rho, const FridgeConfig& cfg) {
  const DensityMatrix q1 = partial_trace(rho, {0});
  return DensityMatrix(
      kron(kron(q1.op(), thermal_state({cfg.E2, cfg.T2}).op()), thermal_state({cfg.E3, cfg.T3}).op()));
}

std::vector<CycleRecord> run_cycles(const FridgeConfig& cfg, std::size_t n_cycles, double theta) {
  if (n_cycles < 1) throw std::invalid_argument("run_cycles: n_cycles must be >= 1");
  FridgeConfig c = cfg;
  c.theta = theta;
  c.validate();

  const Operator u = herm_exp(build_h_exc(c), theta / c.g);
  DensityMatrix rho = initial_state(c);
  std::vector<CycleRecord> out;
  out.reserve(n_cycles + 1);
  out.push_back(snapshot(rho, c, 0, theta));
  for (std::size_t n = 1; n <= n_cycles; ++n) {
    rho = evolve(rho, u);
    CycleRecord r = snapshot(rho, c, n, theta);
    r.dQ1 = r.energy_q1 - out.back().energy_q1;
    out.push_back(r);
    rho = reset_baths(rho, c);
  }
  return out;
}

Convergence detect_convergence(const std::vector<CycleRecord>& records, double tol) {
  if (records.size() < 2) throw std::invalid_argument("detect_convergence: need at least two records");
  Convergence c;
  c.T_limit = records.back().T1;
  if (records.size() < kConvergenceWindow + 1) return c;
  c.converged = true;
  for (std::size_t k = records.size() - kConvergenceWindow; k < records.size(); ++k) {
    if (!(std::abs(records[k].T1 - records[k - 1].T1) < tol)) {
      c.converged = false;
      break;
    }
  }
  return c;
}

double GridRange::at(std::size_t i) const {
  return min + (max - min) * static_cast<double>(i) / static_cast<double>(steps - 1);
}

std::vector<PhasePoint> scan_phase_diagram(const FridgeConfig& base, const GridRange& t2,
                                           const GridRange& t3, double T1_fixed, double theta) {
  for (const GridRange* r : {&t2, &t3}) {
    if (!(r->min > 0.0) || !(r->max >= r->min)) {
      throw std::invalid_argument("scan_phase_diagram: ranges must be positive with min <= max");
    }
    if (r->steps < 2) throw std::invalid_argument("scan_phase_diagram: grid needs >= 2 points per axis");
  }
  std::vector<PhasePoint> out;
  out.reserve(t2.steps * t3.steps);
  FridgeConfig cfg = base;
  cfg.T1 = T1_fixed;
  cfg.theta = theta;
  for (std::size_t i = 0; i < t2.steps; ++i) {
    for (std::size_t j = 0; j < t3.steps; ++j) {
      cfg.T2 = t2.at(i);
      cfg.T3 = t3.at(j);
      out.push_back({cfg.T2, cfg.T3, exchange(cfg).dQ1});
    }
  }
  return out;
}

}  // namespace qfridge
