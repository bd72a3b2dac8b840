#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace hmp::tableio {

using Cell = std::variant<std::int64_t, double, bool, std::string>;

// Column-named rows plus a reproducibility header (version, command,
// flags) carried into every rendering.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  std::vector<std::pair<std::string, std::string>> meta;

  void add_row(std::vector<Cell> row);
};

// Shortest decimal string that round-trips the double exactly.
std::string format_double(double value);

// Header row + one line per row; meta as leading "# key=value" comments.
std::string to_csv(const Table& table);

// {"meta": {...}, "rows": [{column: value, ...}, ...]}
std::string to_json(const Table& table);

// "start:stop:step" (stop-inclusive within half a step) or a single
// number. Returns at least one value.
std::vector<double> parse_grid(const std::string& spec);

}  // namespace hmp::tableio
