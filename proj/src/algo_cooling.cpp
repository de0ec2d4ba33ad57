#include "qfridge/algo_cooling.hpp"

#include <cmath>
#include <random>
#include <sstream>

namespace qfridge {

namespace {

void require_bias(double epsilon, const char* where) {
  if (!(epsilon >= 0.0 && epsilon < 1.0)) {
    std::ostringstream msg;
    msg << where << ": bias must lie in [0, 1), got " << epsilon;
    throw std::invalid_argument(msg.str());
  }
}

// Uniform double in [0, 1) from the top 53 bits, independent of the
// standard library's distribution implementations.
double unit_draw(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

double empirical_bias(const std::vector<std::uint8_t>& bits) {
  if (bits.empty()) return 0.0;
  std::size_t zeros = 0;
  for (std::uint8_t b : bits) zeros += b == 0;
  const auto n = static_cast<double>(bits.size());
  return (2.0 * static_cast<double>(zeros) - n) / n;
}

}  // namespace

double bcs_bias(double epsilon) {
  require_bias(epsilon, "bcs_bias");
  return 2.0 * epsilon / (1.0 + epsilon * epsilon);
}

std::array<double, 4> bcs_outcome_probs(double epsilon) {
  require_bias(epsilon, "bcs_outcome_probs");
  const double same = 1.0 - epsilon * epsilon;
  return {(1.0 + epsilon) * (1.0 + epsilon) / 4.0, same / 4.0, same / 4.0,
          (1.0 - epsilon) * (1.0 - epsilon) / 4.0};
}

double bcs_retention_per_bit(double epsilon) {
  require_bias(epsilon, "bcs_retention_per_bit");
  if (epsilon == 0.0) return 0.25;
  return epsilon / (2.0 * bcs_bias(epsilon));
}

double expected_purified(int l, int m, double epsilon0) {
  if (l < 1) throw std::invalid_argument("expected_purified: l must be >= 1");
  if (m < 2 || m % 2 != 0) throw std::invalid_argument("expected_purified: m must be even and >= 2");
  require_bias(epsilon0, "expected_purified");
  return static_cast<double>(l) * static_cast<double>(m) * (1.0 + epsilon0 * epsilon0) / 4.0;
}

int rounds_to_bias(double epsilon0, double epsilon_target) {
  require_bias(epsilon0, "rounds_to_bias");
  if (!(epsilon_target < 1.0)) throw std::invalid_argument("rounds_to_bias: target must be < 1");
  if (epsilon0 >= epsilon_target) return 0;
  if (epsilon0 == 0.0) throw UnreachableTarget("rounds_to_bias: zero bias is a fixed point");
  int j = 0;
  double eps = epsilon0;
  while (eps < epsilon_target) {
    const double next = bcs_bias(eps);
    if (!(next > eps)) {
      throw UnreachableTarget("rounds_to_bias: iteration stalled below target in floating point");
    }
    eps = next;
    ++j;
  }
  return j;
}

double bias_from_temperature(double energy, double temperature) {
  if (!(energy > 0.0) || !(temperature > 0.0)) {
    throw std::invalid_argument("bias_from_temperature: energy and temperature must be positive");
  }
  return std::tanh(energy / (2.0 * temperature));
}

double bias_sigma(double epsilon, std::size_t n) {
  if (n == 0) return 0.0;
  return std::sqrt((1.0 - epsilon * epsilon) / static_cast<double>(n));
}

std::vector<BcsRound> simulate_bcs_rounds(std::size_t n_bits, double epsilon, int rounds, std::uint64_t seed) {
  require_bias(epsilon, "simulate_bcs");
  if (n_bits < 2 || n_bits % 2 != 0) throw std::invalid_argument("simulate_bcs: n_bits must be even and >= 2");
  if (rounds < 0) throw std::invalid_argument("simulate_bcs: rounds must be >= 0");

  std::mt19937_64 rng(seed);
  const double p0 = (1.0 + epsilon) / 2.0;
  std::vector<std::uint8_t> bits(n_bits);
  for (auto& b : bits) b = unit_draw(rng) < p0 ? 0 : 1;

  std::vector<BcsRound> out;
  out.push_back({0, epsilon, empirical_bias(bits), n_bits, n_bits});
  double analytic = epsilon;
  for (int r = 1; r <= rounds; ++r) {
    std::vector<std::uint8_t> kept;
    kept.reserve(bits.size() / 2);
    // CNOT control -> target; a 0 on the target means the pair agreed.
    for (std::size_t k = 0; k + 1 < bits.size(); k += 2) {
      if ((bits[k] ^ bits[k + 1]) == 0) kept.push_back(bits[k]);
    }
    const std::size_t input = bits.size();
    bits = std::move(kept);
    analytic = bcs_bias(analytic);
    out.push_back({r, analytic, empirical_bias(bits), input, bits.size()});
  }
  return out;
}

BiasState simulate_bcs(std::size_t n_bits, double epsilon, int rounds, std::uint64_t seed) {
  const auto history = simulate_bcs_rounds(n_bits, epsilon, rounds, seed);
  return {history.back().empirical_bias, history.back().retained_bits};
}

}  // namespace qfridge
