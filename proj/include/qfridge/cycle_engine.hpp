#pragma once

#include "qfridge/fridge.hpp"

#include <cstddef>
#include <vector>

namespace qfridge {

/// Snapshot of the target spin after cycle n (n = 0 is the initial state).
struct CycleRecord {
  std::size_t n = 0;
  double theta = 0.0;
  double T1 = 0.0;
  double entropy_q1 = 0.0;
  double energy_q1 = 0.0;
  double dQ1 = 0.0;  // heat into q1 during this cycle
};

/// Exchange then reset q2, q3 to fresh thermal states, n_cycles times.
/// Returns n_cycles + 1 records, starting with the untouched initial state.
std::vector<CycleRecord> run_cycles(const FridgeConfig& cfg, std::size_t n_cycles, double theta);

/// Replaces q2 and q3 by thermal states at (E2,T2), (E3,T3), keeping q1's
/// reduced state.
DensityMatrix reset_baths(const DensityMatrix& rho, const FridgeConfig& cfg);

struct Convergence {
  bool converged = false;
  double T_limit = 0.0;
};

inline constexpr std::size_t kConvergenceWindow = 5;

/// Converged iff the last kConvergenceWindow successive |dT1| are all below
/// tol. Needs at least two records.
Convergence detect_convergence(const std::vector<CycleRecord>& records, double tol);

struct PhasePoint {
  double T2 = 0.0;
  double T3 = 0.0;
  double dQ1 = 0.0;
};

struct GridRange {
  double min = 0.0;
  double max = 0.0;
  std::size_t steps = 2;

  double at(std::size_t i) const;
};

/// One exchange per (T2, T3) grid cell at fixed T1 and theta. Points are
/// ordered T2-major.
std::vector<PhasePoint> scan_phase_diagram(const FridgeConfig& base, const GridRange& t2,
                                           const GridRange& t3, double T1_fixed, double theta);

}  // namespace qfridge
