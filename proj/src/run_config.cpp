#include "qfridge/run_config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace qfridge {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    parts.push_back(trim(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

[[noreturn]] void bad_value(std::string_view key, std::string_view value, std::string_view expected) {
  std::ostringstream msg;
  msg << "invalid value '" << value << "' for key '" << key << "': expected " << expected;
  throw ConfigError(msg.str());
}

double to_double(std::string_view key, std::string_view text) {
  text = trim(text);
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty()) bad_value(key, text, "a real number");
  return v;
}

std::uint64_t to_unsigned(std::string_view key, std::string_view text) {
  text = trim(text);
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty()) {
    bad_value(key, text, "a non-negative integer");
  }
  return v;
}

using Setter = void (*)(RunConfig&, std::string_view key, std::string_view value);

struct KeySetter {
  const char* key;
  Setter set;
};

const KeySetter kSetters[] = {
    {"command", [](RunConfig& c, std::string_view, std::string_view v) { c.command = parse_command(v); }},
    {"E1", [](RunConfig& c, std::string_view k, std::string_view v) { c.fridge.E1 = to_double(k, v); }},
    {"E2", [](RunConfig& c, std::string_view k, std::string_view v) { c.fridge.E2 = to_double(k, v); }},
    {"E3", [](RunConfig& c, std::string_view k, std::string_view v) { c.fridge.E3 = to_double(k, v); }},
    {"T1", [](RunConfig& c, std::string_view k, std::string_view v) { c.fridge.T1 = to_double(k, v); }},
    {"T2", [](RunConfig& c, std::string_view k, std::string_view v) { c.fridge.T2 = to_double(k, v); }},
    {"T3", [](RunConfig& c, std::string_view k, std::string_view v) { c.fridge.T3 = to_double(k, v); }},
    {"g", [](RunConfig& c, std::string_view k, std::string_view v) { c.fridge.g = to_double(k, v); }},
    {"theta",
     [](RunConfig& c, std::string_view k, std::string_view v) {
       if (v.size() >= 2 && v.front() == '[' && v.back() == ']') v = v.substr(1, v.size() - 2);
       std::vector<double> thetas;
       for (std::string_view part : split(v, ',')) {
         try {
           thetas.push_back(parse_angle(part));
         } catch (const ConfigError&) {
           bad_value(k, part, "an angle such as 1.5708 or pi/2");
         }
       }
       c.theta_list = std::move(thetas);
       c.fridge.theta = c.theta_list.front();
     }},
    {"cycles", [](RunConfig& c, std::string_view k, std::string_view v) { c.n_cycles = to_unsigned(k, v); }},
    {"grid",
     [](RunConfig& c, std::string_view k, std::string_view v) {
       const auto parts = split(v, ',');
       if (parts.size() != 5) bad_value(k, v, "T2_min,T2_max,T3_min,T3_max,steps");
       c.grid.T2_min = to_double(k, parts[0]);
       c.grid.T2_max = to_double(k, parts[1]);
       c.grid.T3_min = to_double(k, parts[2]);
       c.grid.T3_max = to_double(k, parts[3]);
       c.grid.steps = to_unsigned(k, parts[4]);
     }},
    {"bits", [](RunConfig& c, std::string_view k, std::string_view v) { c.bcs.n_bits = to_unsigned(k, v); }},
    {"epsilon0", [](RunConfig& c, std::string_view k, std::string_view v) { c.bcs.epsilon0 = to_double(k, v); }},
    {"rounds",
     [](RunConfig& c, std::string_view k, std::string_view v) {
       const auto r = to_unsigned(k, v);
       if (r > 64) bad_value(k, v, "at most 64 rounds");
       c.bcs.rounds = static_cast<int>(r);
     }},
    {"seed", [](RunConfig& c, std::string_view k, std::string_view v) { c.bcs.seed = to_unsigned(k, v); }},
    {"out", [](RunConfig& c, std::string_view, std::string_view v) { c.output_path = std::string(v); }},
    {"format",
     [](RunConfig& c, std::string_view k, std::string_view v) {
       if (v == "csv") {
         c.format = OutputFormat::Csv;
       } else if (v == "json") {
         c.format = OutputFormat::Json;
       } else {
         bad_value(k, v, "csv or json");
       }
     }},
    {"delta_scale", [](RunConfig& c, std::string_view k, std::string_view v) { c.delta_scale = to_double(k, v); }},
};

}  // namespace

Command parse_command(std::string_view name) {
  if (name == "exchange") return Command::Exchange;
  if (name == "ledger") return Command::Ledger;
  if (name == "cycles") return Command::Cycles;
  if (name == "phase-diagram") return Command::PhaseDiagram;
  if (name == "cop") return Command::Cop;
  if (name == "bcs") return Command::Bcs;
  if (name == "verify-decomposition") return Command::VerifyDecomposition;
  throw ConfigError("unknown command '" + std::string(name) + "'");
}

std::string_view command_name(Command c) {
  switch (c) {
    case Command::Exchange: return "exchange";
    case Command::Ledger: return "ledger";
    case Command::Cycles: return "cycles";
    case Command::PhaseDiagram: return "phase-diagram";
    case Command::Cop: return "cop";
    case Command::Bcs: return "bcs";
    case Command::VerifyDecomposition: return "verify-decomposition";
  }
  return "unknown";
}

std::string_view format_name(OutputFormat f) { return f == OutputFormat::Json ? "json" : "csv"; }

double parse_angle(std::string_view text) {
  text = trim(text);
  if (text.empty()) throw ConfigError("empty angle");
  const auto pi_pos = text.find("pi");
  if (pi_pos == std::string_view::npos) return to_double("theta", text);

  // [sign][factor]pi[/denominator]
  std::string_view factor_text = trim(text.substr(0, pi_pos));
  double factor = 1.0;
  if (factor_text == "-") {
    factor = -1.0;
  } else if (!factor_text.empty() && factor_text != "+") {
    if (factor_text.back() == '*') factor_text.remove_suffix(1);
    factor = to_double("theta", factor_text);
  }
  std::string_view rest = trim(text.substr(pi_pos + 2));
  double denom = 1.0;
  if (!rest.empty()) {
    if (rest.front() != '/') throw ConfigError("malformed angle '" + std::string(text) + "'");
    denom = to_double("theta", rest.substr(1));
    if (denom == 0.0) throw ConfigError("angle denominator is zero");
  }
  return factor * kPi / denom;
}

void apply_setting(RunConfig& cfg, std::string_view key, std::string_view value) {
  key = trim(key);
  value = trim(value);
  std::string normalized(key);
  std::replace(normalized.begin(), normalized.end(), '-', '_');
  if (normalized == "theta_list") normalized = "theta";
  if (normalized == "n_cycles") normalized = "cycles";
  for (const KeySetter& s : kSetters) {
    if (normalized == s.key) {
      s.set(cfg, key, value);
      return;
    }
  }
  throw ConfigError("unknown configuration key '" + std::string(key) + "'");
}

RunConfig parse_config_text(std::string_view text, RunConfig base) {
  std::size_t line_no = 0;
  for (std::string_view line : split(text, '\n')) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError("line " + std::to_string(line_no) + ": expected key = value");
    }
    apply_setting(base, line.substr(0, eq), line.substr(eq + 1));
  }
  return base;
}

RunConfig load_config_file(const std::string& path, RunConfig base) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config_text(buf.str(), std::move(base));
}

void validate(const RunConfig& cfg) {
  try {
    cfg.fridge.validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  if (cfg.theta_list.empty()) throw ConfigError("theta list must not be empty");
  for (double t : cfg.theta_list) {
    if (!std::isfinite(t)) throw ConfigError("theta values must be finite");
  }
  if (cfg.n_cycles < 1) throw ConfigError("cycles must be >= 1");
  const GridSpec& g = cfg.grid;
  if (!(g.T2_min > 0.0 && g.T3_min > 0.0)) throw ConfigError("grid temperatures must be positive");
  if (!(g.T2_max >= g.T2_min && g.T3_max >= g.T3_min)) throw ConfigError("grid ranges need min <= max");
  if (g.steps < 2) throw ConfigError("grid steps must be >= 2 per axis");
  if (cfg.bcs.n_bits < 2 || cfg.bcs.n_bits % 2 != 0) throw ConfigError("bits must be even and >= 2");
  if (!(cfg.bcs.epsilon0 >= 0.0 && cfg.bcs.epsilon0 < 1.0)) throw ConfigError("epsilon0 must lie in [0, 1)");
  if (!(cfg.delta_scale > 0.0) || !std::isfinite(cfg.delta_scale)) {
    throw ConfigError("delta_scale must be positive and finite");
  }
}

const std::vector<std::string>& config_keys() {
  static const std::vector<std::string> keys = [] {
    std::vector<std::string> k;
    for (const KeySetter& s : kSetters) k.emplace_back(s.key);
    return k;
  }();
  return keys;
}

}  // namespace qfridge
