#pragma once

// Heat-bath algorithmic cooling on classical bit strings. A bit with bias
// eps is 0 with probability (1 + eps)/2.

#include <array>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string_view>
#include <vector>

namespace qfridge {

class UnreachableTarget : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

struct BiasState {
  double epsilon = 0.0;
  std::size_t n_bits = 0;
};

/// Bias after one Basic Compression Subroutine: 2 eps / (1 + eps^2).
double bcs_bias(double epsilon);

/// Probabilities of the CNOT outcomes 0c0t, 0c1t, 1c0t, 1c1t (input labels).
std::array<double, 4> bcs_outcome_probs(double epsilon);

/// Expected purified bits per input bit, eps_prev / (2 eps_new) = (1 + eps^2)/4.
double bcs_retention_per_bit(double epsilon);

/// l m (1 + eps0^2) / 4.
double expected_purified(int l, int m, double epsilon0);

/// Smallest j with the j-fold iterate of bcs_bias >= target (0 if eps0 >= target).
int rounds_to_bias(double epsilon0, double epsilon_target);

/// eps = tanh(E / 2T): the bias of a thermal spin.
double bias_from_temperature(double energy, double temperature);

inline constexpr std::string_view kPrngName = "mt19937_64";

struct BcsRound {
  int round = 0;
  double analytic_bias = 0.0;
  double empirical_bias = 0.0;
  std::size_t input_bits = 0;
  std::size_t retained_bits = 0;
};

/// Stochastic BCS: draws n_bits i.i.d. bits at bias epsilon, then applies
/// `rounds` compressions, each acting on the survivors of the previous one.
std::vector<BcsRound> simulate_bcs_rounds(std::size_t n_bits, double epsilon, int rounds, std::uint64_t seed);

/// Empirical bias and bit count after the final round.
BiasState simulate_bcs(std::size_t n_bits, double epsilon, int rounds, std::uint64_t seed);

/// One-sigma binomial error of an empirical bias over n bits at bias eps.
double bias_sigma(double epsilon, std::size_t n);

}  // namespace qfridge
