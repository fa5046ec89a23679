#include <dielqed/report.hpp>

#include <algorithm>
#include <cstdio>
#include <stdexcept>

#include <json.hpp>

namespace dielqed::report {

namespace {

std::string csv_escape(const std::string& cell) {
  if (cell.find_first_of(",\"\n") == std::string::npos) return cell;
  std::string quoted = "\"";
  for (char ch : cell) {
    quoted += ch;
    if (ch == '"') quoted += '"';
  }
  quoted += '"';
  return quoted;
}

std::string plain_text(const Cell& cell, bool table_style) {
  if (const auto* text = std::get_if<std::string>(&cell)) return *text;
  if (const auto* value = std::get_if<double>(&cell)) return format_number(*value);
  const bool flag = std::get<bool>(cell);
  if (table_style) return flag ? "pass" : "FAIL";
  return flag ? "true" : "false";
}

void require_rectangular(const Table& table) {
  for (const auto& row : table.rows) {
    if (row.size() != table.columns.size())
      throw std::invalid_argument("report row width does not match column count");
  }
}

std::string render_csv(const Table& table) {
  std::string out;
  for (std::size_t c = 0; c < table.columns.size(); ++c) {
    if (c) out += ',';
    out += csv_escape(table.columns[c]);
  }
  out += '\n';
  for (const auto& row : table.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out += ',';
      out += csv_escape(plain_text(row[c], false));
    }
    out += '\n';
  }
  return out;
}

std::string render_json(const Table& table) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& row : table.rows) {
    nlohmann::ordered_json entry;
    for (std::size_t c = 0; c < row.size(); ++c) {
      const std::string& key = table.columns[c];
      if (const auto* text = std::get_if<std::string>(&row[c]))
        entry[key] = *text;
      else if (const auto* value = std::get_if<double>(&row[c]))
        entry[key] = std::stod(format_number(*value));
      else
        entry[key] = std::get<bool>(row[c]);
    }
    rows.push_back(std::move(entry));
  }
  return rows.dump(2) + "\n";
}

std::string render_table(const Table& table) {
  const std::size_t width = table.columns.size();
  std::vector<std::vector<std::string>> cells;
  std::vector<bool> numeric(width, false);
  cells.reserve(table.rows.size());
  for (const auto& row : table.rows) {
    std::vector<std::string> rendered;
    rendered.reserve(width);
    for (std::size_t c = 0; c < width; ++c) {
      rendered.push_back(plain_text(row[c], true));
      if (std::holds_alternative<double>(row[c])) numeric[c] = true;
    }
    cells.push_back(std::move(rendered));
  }

  std::vector<std::size_t> widths(width);
  for (std::size_t c = 0; c < width; ++c) {
    widths[c] = table.columns[c].size();
    for (const auto& row : cells) widths[c] = std::max(widths[c], row[c].size());
  }

  auto emit_row = [&](const std::vector<std::string>& row, std::string& out) {
    std::string line;
    for (std::size_t c = 0; c < width; ++c) {
      if (c) line += "  ";
      const std::size_t pad = widths[c] - row[c].size();
      if (numeric[c]) line += std::string(pad, ' ') + row[c];
      else line += row[c] + std::string(pad, ' ');
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line + '\n';
  };

  std::string out;
  emit_row(table.columns, out);
  std::vector<std::string> rule;
  rule.reserve(width);
  for (std::size_t c = 0; c < width; ++c) rule.emplace_back(widths[c], '-');
  emit_row(rule, out);
  for (const auto& row : cells) emit_row(row, out);
  return out;
}

}  // namespace

Format parse_format(const std::string& name) {
  if (name == "table") return Format::Table;
  if (name == "csv") return Format::Csv;
  if (name == "json") return Format::Json;
  throw std::invalid_argument("unknown format: " + name);
}

std::string format_number(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.12g", value);
  return buffer;
}

std::string render(const Table& table, Format format) {
  require_rectangular(table);
  switch (format) {
    case Format::Csv: return render_csv(table);
    case Format::Json: return render_json(table);
    case Format::Table: break;
  }
  return render_table(table);
}

}  // namespace dielqed::report
