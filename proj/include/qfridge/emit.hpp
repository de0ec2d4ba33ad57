#pragma once

// Deterministic CSV / JSON serialization of engine results.

#include "qfridge/run_config.hpp"

#include "json.hpp"

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace qfridge {

using Cell = std::variant<std::int64_t, double, std::string>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  nlohmann::ordered_json meta = nlohmann::ordered_json::object();
};

inline constexpr std::string_view kCodeVersion = "0.1.0";

/// Shortest decimal that round-trips; "inf", "-inf" and "nan" otherwise.
std::string format_double(double v);

/// Header row then one line per row, '\n' line endings.
std::string to_csv(const Table& t);

/// {"meta": {...}, "data": [{column: value, ...}, ...]}.
std::string to_json(const Table& t);

/// Writes the table to `path` (standard output when empty). Returns 0 on
/// success and 2 on an I/O failure, with a one-line diagnostic on `err`.
int emit(const Table& t, OutputFormat format, const std::string& path, std::ostream& out, std::ostream& err);

}  // namespace qfridge
