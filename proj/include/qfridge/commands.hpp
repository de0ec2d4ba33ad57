#pragma once

#include "qfridge/emit.hpp"
#include "qfridge/run_config.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace qfridge {

// Exit codes of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitIo = 2;

// verify-decomposition fails below this fidelity.
inline constexpr double kDecompositionGate = 1.0 - 1e-8;

struct CommandResult {
  Table table;
  int status = kExitOk;
  std::vector<std::string> notes;  // one-line summaries for stderr
};

/// Runs a validated configuration and collects its output rows.
CommandResult run_command(const RunConfig& cfg);

/// Full command-line entry point; args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qfridge
