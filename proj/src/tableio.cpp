#include "hmp/tableio.hpp"

#include <charconv>
#include <sstream>

#include <nlohmann/json.hpp>

#include "hmp/errors.hpp"

namespace hmp::tableio {

void Table::add_row(std::vector<Cell> row) {
  if (row.size() != columns.size()) {
    throw invalid_input_error("table: row width differs from column count");
  }
  rows.push_back(std::move(row));
}

std::string format_double(double value) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, res.ptr);
}

namespace {

std::string cell_to_csv(const Cell& cell) {
  if (std::holds_alternative<std::int64_t>(cell)) {
    return std::to_string(std::get<std::int64_t>(cell));
  }
  if (std::holds_alternative<double>(cell)) {
    return format_double(std::get<double>(cell));
  }
  if (std::holds_alternative<bool>(cell)) {
    return std::get<bool>(cell) ? "true" : "false";
  }
  return std::get<std::string>(cell);
}

nlohmann::json cell_to_json(const Cell& cell) {
  if (std::holds_alternative<std::int64_t>(cell)) return std::get<std::int64_t>(cell);
  if (std::holds_alternative<double>(cell)) return std::get<double>(cell);
  if (std::holds_alternative<bool>(cell)) return std::get<bool>(cell);
  return std::get<std::string>(cell);
}

}  // namespace

std::string to_csv(const Table& table) {
  std::ostringstream out;
  for (const auto& [key, value] : table.meta) {
    out << "# " << key << "=" << value << "\n";
  }
  for (size_t i = 0; i < table.columns.size(); ++i) {
    if (i > 0) out << ",";
    out << table.columns[i];
  }
  out << "\n";
  for (const auto& row : table.rows) {
    for (size_t i = 0; i < row.size(); ++i) {
      if (i > 0) out << ",";
      out << cell_to_csv(row[i]);
    }
    out << "\n";
  }
  return out.str();
}

std::string to_json(const Table& table) {
  nlohmann::json meta = nlohmann::json::object();
  for (const auto& [key, value] : table.meta) meta[key] = value;
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : table.rows) {
    nlohmann::json obj = nlohmann::json::object();
    for (size_t i = 0; i < row.size(); ++i) {
      obj[table.columns[i]] = cell_to_json(row[i]);
    }
    rows.push_back(std::move(obj));
  }
  const nlohmann::json doc = {{"meta", meta}, {"rows", rows}};
  return doc.dump(2) + "\n";
}

std::vector<double> parse_grid(const std::string& spec) {
  const auto parse_number = [](const std::string& text) {
    try {
      size_t used = 0;
      const double v = std::stod(text, &used);
      if (used != text.size()) throw std::invalid_argument("trailing characters");
      return v;
    } catch (const std::exception&) {
      throw invalid_input_error("grid: cannot parse number '" + text + "'");
    }
  };
  const auto first = spec.find(':');
  if (first == std::string::npos) {
    return {parse_number(spec)};
  }
  const auto second = spec.find(':', first + 1);
  if (second == std::string::npos) {
    throw invalid_input_error("grid: expected start:stop:step");
  }
  const double start = parse_number(spec.substr(0, first));
  const double stop = parse_number(spec.substr(first + 1, second - first - 1));
  const double step = parse_number(spec.substr(second + 1));
  if (!(step > 0.0)) throw invalid_input_error("grid: step must be positive");
  if (stop < start - 0.5 * step) throw invalid_input_error("grid: empty range");
  std::vector<double> out;
  for (int i = 0;; ++i) {
    const double v = start + i * step;
    if (v > stop + 0.5 * step) break;
    out.push_back(v);
  }
  return out;
}

}  // namespace hmp::tableio
