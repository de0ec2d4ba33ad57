#include "qfridge/emit.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <ostream>

namespace qfridge {

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, end);
}

namespace {

std::string csv_cell(const Cell& c) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, double>) {
          return format_double(v);
        } else if constexpr (std::is_same_v<T, std::int64_t>) {
          return std::to_string(v);
        } else {
          if (v.find_first_of(",\"\n") == std::string::npos) return v;
          std::string quoted = "\"";
          for (char ch : v) {
            if (ch == '"') quoted += '"';
            quoted += ch;
          }
          return quoted + '"';
        }
      },
      c);
}

nlohmann::ordered_json json_cell(const Cell& c) {
  return std::visit([](const auto& v) { return nlohmann::ordered_json(v); }, c);
}

}  // namespace

std::string to_csv(const Table& t) {
  std::string out;
  for (std::size_t k = 0; k < t.columns.size(); ++k) {
    if (k > 0) out += ',';
    out += t.columns[k];
  }
  out += '\n';
  for (const auto& row : t.rows) {
    for (std::size_t k = 0; k < row.size(); ++k) {
      if (k > 0) out += ',';
      out += csv_cell(row[k]);
    }
    out += '\n';
  }
  return out;
}

std::string to_json(const Table& t) {
  nlohmann::ordered_json doc;
  doc["meta"] = t.meta;
  auto data = nlohmann::ordered_json::array();
  for (const auto& row : t.rows) {
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    for (std::size_t k = 0; k < row.size() && k < t.columns.size(); ++k) obj[t.columns[k]] = json_cell(row[k]);
    data.push_back(std::move(obj));
  }
  doc["data"] = std::move(data);
  return doc.dump(2) + "\n";
}

int emit(const Table& t, OutputFormat format, const std::string& path, std::ostream& out, std::ostream& err) {
  const std::string text = format == OutputFormat::Json ? to_json(t) : to_csv(t);
  if (path.empty()) {
    out << text;
    out.flush();
    return out ? 0 : 2;
  }
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) {
    err << "error: cannot open output file '" << path << "'\n";
    return 2;
  }
  file << text;
  file.close();
  if (!file) {
    err << "error: failed writing output file '" << path << "'\n";
    return 2;
  }
  return 0;
}

}  // namespace qfridge
