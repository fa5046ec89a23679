#pragma once

#include <string>
#include <variant>
#include <vector>

namespace dielqed::report {

enum class Format { Table, Csv, Json };

Format parse_format(const std::string& name);

// Value with 12 significant digits, shortest C representation.
std::string format_number(double value);

using Cell = std::variant<std::string, double, bool>;

// Column-ordered rows rendered identically on every run: an aligned text
// table, minimally quoted CSV, or a JSON array of row objects.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

std::string render(const Table& table, Format format);

}  // namespace dielqed::report
