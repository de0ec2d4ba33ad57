#include "qfridge/commands.hpp"

#include "qfridge/algo_cooling.hpp"
#include "qfridge/cycle_engine.hpp"
#include "qfridge/fridge.hpp"
#include "qfridge/gate_compiler.hpp"

#include "CLI11.hpp"

#include <cmath>
#include <limits>
#include <map>
#include <ostream>
#include <sstream>

namespace qfridge {

namespace {

using Row = std::vector<Cell>;
using Json = nlohmann::ordered_json;

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

Json config_echo(const RunConfig& cfg) {
  Json c;
  c["E1"] = cfg.fridge.E1;
  c["E2"] = cfg.fridge.E2;
  c["E3"] = cfg.fridge.E3;
  c["T1"] = cfg.fridge.T1;
  c["T2"] = cfg.fridge.T2;
  c["T3"] = cfg.fridge.T3;
  c["g"] = cfg.fridge.g;
  c["theta_list"] = cfg.theta_list;
  c["cycles"] = cfg.n_cycles;
  c["grid"] = {cfg.grid.T2_min, cfg.grid.T2_max, cfg.grid.T3_min, cfg.grid.T3_max, cfg.grid.steps};
  c["bits"] = cfg.bcs.n_bits;
  c["epsilon0"] = cfg.bcs.epsilon0;
  c["rounds"] = cfg.bcs.rounds;
  c["seed"] = cfg.bcs.seed;
  return c;
}

std::string fmt(double v) { return format_double(v); }

void exchange_table(const RunConfig& cfg, CommandResult& res) {
  const double s = cfg.delta_scale;
  res.table.columns = {"theta",    "P010_before", "P101_before", "P010_after", "P101_after",
                       "dQ1",      "dQ2",         "dQ3",         "T1_after",   "T2_after",
                       "T3_after", "entropy_q1",  "entropy_q2",  "entropy_q3", "energy_q1",
                       "energy_q2", "energy_q3"};
  FridgeConfig fc = cfg.fridge;
  for (double theta : cfg.theta_list) {
    fc.theta = theta;
    const ExchangeReport r = exchange(fc);
    res.table.rows.push_back(Row{theta, r.P010_before, r.P101_before, r.P010_after, r.P101_after, s * r.dQ1,
                                 s * r.dQ2, s * r.dQ3, s * r.T1_after.value, s * r.T2_after.value,
                                 s * r.T3_after.value, r.entropy_after[0], r.entropy_after[1], r.entropy_after[2],
                                 s * r.energy_after[0], s * r.energy_after[1], s * r.energy_after[2]});
  }
}

void ledger_table(const RunConfig& cfg, CommandResult& res) {
  const double s = cfg.delta_scale;
  const double theta = cfg.theta_list.front();
  FridgeConfig fc = cfg.fridge;
  fc.theta = theta;
  const CompiledSequence seq = compile(theta, fc.g);
  const LedgerRun run = run_with_ledger(seq, initial_state(fc), fridge_system_hamiltonian(fc));
  res.table.columns = {"step", "label", "dW1", "dQ1", "dW2", "net_work", "cumulative_work"};
  for (std::size_t k = 0; k < run.entries.size(); ++k) {
    const WorkLedgerEntry& e = run.entries[k];
    res.table.rows.push_back(Row{static_cast<std::int64_t>(e.step_index), seq.steps[k].label, s * e.dW1, s * e.dQ1,
                                 s * e.dW2, s * e.net_work, s * e.cumulative_work});
  }
  const double final_work = run.entries.empty() ? 0.0 : run.entries.back().cumulative_work;
  res.table.meta["theta"] = theta;
  res.table.meta["final_cumulative_work"] = s * final_work;
  res.notes.push_back("theta=" + fmt(theta) + " steps=" + std::to_string(run.entries.size()) +
                      " final_cumulative_work=" + fmt(s * final_work));
}

void cycles_table(const RunConfig& cfg, CommandResult& res) {
  const double s = cfg.delta_scale;
  res.table.columns = {"n", "theta", "T1", "entropy_q1", "energy_q1", "dQ1"};
  Json limits = Json::array();
  for (double theta : cfg.theta_list) {
    const auto records = run_cycles(cfg.fridge, cfg.n_cycles, theta);
    for (const CycleRecord& r : records) {
      res.table.rows.push_back(
          Row{static_cast<std::int64_t>(r.n), theta, s * r.T1, r.entropy_q1, s * r.energy_q1, s * r.dQ1});
    }
    const Convergence c = detect_convergence(records, 1e-8);
    limits.push_back({{"theta", theta}, {"converged", c.converged}, {"T_limit", s * c.T_limit}});
    res.notes.push_back("theta=" + fmt(theta) + " converged=" + (c.converged ? "true" : "false") +
                        " T_limit=" + fmt(s * c.T_limit));
  }
  res.table.meta["limits"] = limits;
  try {
    const FridgeConfig& f = cfg.fridge;
    const double tb = bound_temperature(f.E1, f.E2, f.E3, f.T2, f.T3);
    res.table.meta["T_bound"] = s * tb;
    res.notes.push_back("T_bound=" + fmt(s * tb));
  } catch (const NoCoolingRegime&) {
    res.table.meta["T_bound"] = nullptr;
    res.notes.emplace_back("T_bound undefined: no cooling regime for these bath temperatures");
  }
}

void phase_table(const RunConfig& cfg, CommandResult& res) {
  const double s = cfg.delta_scale;
  const double theta = cfg.theta_list.front();
  const GridRange t2{cfg.grid.T2_min, cfg.grid.T2_max, cfg.grid.steps};
  const GridRange t3{cfg.grid.T3_min, cfg.grid.T3_max, cfg.grid.steps};
  res.table.columns = {"T2", "T3", "dQ1"};
  for (const PhasePoint& p : scan_phase_diagram(cfg.fridge, t2, t3, cfg.fridge.T1, theta)) {
    res.table.rows.push_back(Row{s * p.T2, s * p.T3, s * p.dQ1});
  }
  res.table.meta["theta"] = theta;
  res.table.meta["T1_fixed"] = s * cfg.fridge.T1;
}

void cop_table(const RunConfig& cfg, CommandResult& res) {
  const double s = cfg.delta_scale;
  const GridRange t2{cfg.grid.T2_min, cfg.grid.T2_max, cfg.grid.steps};
  FridgeConfig fc = cfg.fridge;
  fc.theta = cfg.theta_list.front();
  res.table.columns = {"T2", "cop", "carnot_limit", "dQ1", "dQ3", "dynamic_cop"};
  for (std::size_t i = 0; i < t2.steps; ++i) {
    fc.T2 = t2.at(i);
    const ExchangeReport r = exchange(fc);
    const double carnot = (fc.T1 <= fc.T2 && fc.T2 < fc.T3) ? carnot_limit(fc.T1, fc.T2, fc.T3) : kNan;
    const double ratio = r.dQ3 != 0.0 ? std::abs(r.dQ1) / std::abs(r.dQ3) : kNan;
    res.table.rows.push_back(Row{s * fc.T2, cop(fc), carnot, s * r.dQ1, s * r.dQ3, ratio});
  }
}

void bcs_table(const RunConfig& cfg, CommandResult& res) {
  res.table.columns = {"round", "analytic_bias", "empirical_bias", "retained_bits"};
  for (const BcsRound& r : simulate_bcs_rounds(cfg.bcs.n_bits, cfg.bcs.epsilon0, cfg.bcs.rounds, cfg.bcs.seed)) {
    res.table.rows.push_back(Row{static_cast<std::int64_t>(r.round), r.analytic_bias, r.empirical_bias,
                                 static_cast<std::int64_t>(r.retained_bits)});
  }
}

void verify_table(const RunConfig& cfg, CommandResult& res) {
  res.table.columns = {"index", "label", "duration"};
  Json checks = Json::array();
  double worst = 1.0;
  for (std::size_t k = 0; k < cfg.theta_list.size(); ++k) {
    const double theta = cfg.theta_list[k];
    const CompiledSequence seq = compile(theta, cfg.fridge.g);
    const CompiledSequence permuted = compile(theta, cfg.fridge.g, {3, 2, 1, 0});
    const double f = verify(seq, theta);
    const double fp = verify(permuted, theta);
    worst = std::min({worst, f, fp});
    checks.push_back({{"theta", theta}, {"fidelity", f}, {"fidelity_reversed_blocks", fp}});
    res.notes.push_back("theta=" + fmt(theta) + " fidelity=" + fmt(f) + " reversed_blocks=" + fmt(fp));
    if (k == 0) {
      for (std::size_t i = 0; i < seq.steps.size(); ++i) {
        res.table.rows.push_back(Row{static_cast<std::int64_t>(i + 1), seq.steps[i].label, seq.steps[i].duration});
      }
    }
  }
  res.table.meta["checks"] = checks;
  res.table.meta["fidelity_gate"] = kDecompositionGate;
  if (worst < kDecompositionGate) {
    res.status = kExitValidation;
    res.notes.push_back("decomposition fidelity " + fmt(worst) + " below gate " + fmt(kDecompositionGate));
  }
}

}  // namespace

CommandResult run_command(const RunConfig& cfg) {
  validate(cfg);
  CommandResult res;
  res.table.meta["command"] = std::string(command_name(cfg.command));
  res.table.meta["code_version"] = std::string(kCodeVersion);
  res.table.meta["prng"] = std::string(kPrngName);
  res.table.meta["delta_scale"] = cfg.delta_scale;
  res.table.meta["units"] = "energies and temperatures in delta (k_B = 1) times delta_scale";
  res.table.meta["config"] = config_echo(cfg);
  switch (cfg.command) {
    case Command::Exchange: exchange_table(cfg, res); break;
    case Command::Ledger: ledger_table(cfg, res); break;
    case Command::Cycles: cycles_table(cfg, res); break;
    case Command::PhaseDiagram: phase_table(cfg, res); break;
    case Command::Cop: cop_table(cfg, res); break;
    case Command::Bcs: bcs_table(cfg, res); break;
    case Command::VerifyDecomposition: verify_table(cfg, res); break;
  }
  return res;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact density-matrix simulator of a three-spin self-contained refrigerator", "qfridge"};
  app.require_subcommand(1);

  struct Flag {
    const char* name;
    const char* key;
    const char* help;
  };
  static const Flag kFlags[] = {
      {"--out", "out", "output file (default: standard output)"},
      {"--format", "format", "csv or json"},
      {"--seed", "seed", "PRNG seed for bcs"},
      {"--grid", "grid", "T2_min,T2_max,T3_min,T3_max,steps"},
      {"--theta", "theta", "comma-separated angles, e.g. pi/8,pi/4,1.5708"},
      {"--cycles", "cycles", "number of refrigeration cycles"},
      {"--delta-scale", "delta_scale", "display multiplier for energies and temperatures"},
      {"--E1", "E1", "gap of q1"},
      {"--E2", "E2", "gap of q2 (must equal E1+E3)"},
      {"--E3", "E3", "gap of q3"},
      {"--T1", "T1", "temperature of q1"},
      {"--T2", "T2", "temperature of q2"},
      {"--T3", "T3", "temperature of q3"},
      {"--g", "g", "exchange coupling"},
      {"--bits", "bits", "number of bits for bcs"},
      {"--epsilon0", "epsilon0", "initial bias for bcs"},
      {"--rounds", "rounds", "bcs rounds"},
  };

  std::string config_path;
  std::map<std::string, std::string> values;
  std::map<std::string, CLI::Option*> options;
  const char* names[] = {"exchange", "ledger", "cycles", "phase-diagram", "cop", "bcs", "verify-decomposition"};
  for (const char* name : names) {
    CLI::App* sub = app.add_subcommand(name, std::string("run ") + name);
    sub->add_option("--config", config_path, "key=value configuration file");
    for (const Flag& f : kFlags) {
      options[std::string(name) + f.key] = sub->add_option(f.name, values[f.key], f.help);
    }
  }

  std::vector<std::string> argv_storage{"qfridge"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (std::string& a : argv_storage) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  RunConfig cfg;
  try {
    if (!config_path.empty()) cfg = load_config_file(config_path, cfg);
    cfg.command = parse_command(command);
    for (const Flag& f : kFlags) {
      if (options[command + f.key]->count() > 0) apply_setting(cfg, f.key, values[f.key]);
    }
    validate(cfg);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  }

  CommandResult res;
  try {
    res = run_command(cfg);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  }
  for (const std::string& note : res.notes) err << note << "\n";
  const int io = emit(res.table, cfg.format, cfg.output_path, out, err);
  if (io != kExitOk) return io;
  return res.status;
}

}  // namespace qfridge
