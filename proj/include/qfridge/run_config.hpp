#pragma once

// Run configuration for the command-line front end. A config file is flat
// `key = value` text ('#' starts a comment); command-line flags are applied
// through the same setter afterwards, so they override file values.

#include "qfridge/fridge.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qfridge {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Command { Exchange, Ledger, Cycles, PhaseDiagram, Cop, Bcs, VerifyDecomposition };
enum class OutputFormat { Csv, Json };

struct GridSpec {
  double T2_min = 2.0;
  double T2_max = 6.0;
  double T3_min = 2.0;
  double T3_max = 10.0;
  std::size_t steps = 41;
};

struct BcsSpec {
  std::size_t n_bits = 1'000'000;
  double epsilon0 = 0.5;
  int rounds = 3;
  std::uint64_t seed = 42;
};

struct RunConfig {
  Command command = Command::Exchange;
  FridgeConfig fridge = paper_config();
  std::vector<double> theta_list{kPi / 2.0};
  std::size_t n_cycles = 30;
  GridSpec grid;
  BcsSpec bcs;
  std::string output_path;  // empty: standard output
  OutputFormat format = OutputFormat::Csv;
  double delta_scale = 1.0;  // display multiplier for energies and temperatures
};

Command parse_command(std::string_view name);
std::string_view command_name(Command c);
std::string_view format_name(OutputFormat f);

/// Parses "0.3927", "pi/8", "3pi/8", "-pi/4", "pi".
double parse_angle(std::string_view text);

/// Sets one key. Throws ConfigError naming an unknown key or a malformed value.
void apply_setting(RunConfig& cfg, std::string_view key, std::string_view value);

/// Applies every `key = value` line of `text` on top of `base`.
RunConfig parse_config_text(std::string_view text, RunConfig base = {});

RunConfig load_config_file(const std::string& path, RunConfig base = {});

/// Checks every field against the preconditions of the engine it feeds.
/// Throws ConfigError citing the violated invariant.
void validate(const RunConfig& cfg);

/// All keys understood by apply_setting, in a stable order.
const std::vector<std::string>& config_keys();

}  // namespace qfridge
