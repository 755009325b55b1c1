#include "qsix/table.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <ostream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "qsix/errors.hpp"

namespace qsix {

void ResultTable::add_row(std::vector<Cell> row) {
  if (row.size() != columns.size())
    throw std::invalid_argument("ResultTable: row width does not match header");
  rows.push_back(std::move(row));
}

namespace table {

OutputFormat parse_format(const std::string& name) {
  if (name == "csv")
    return OutputFormat::Csv;
  if (name == "json")
    return OutputFormat::Json;
  throw UsageError("unknown output format '" + name + "' (csv|json)");
}

std::string format_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.15g", v);
  return buf;
}

namespace {

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos)
    return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"')
      out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string cell_to_csv(const Cell& c) {
  if (std::holds_alternative<std::monostate>(c))
    return "";
  if (const auto* i = std::get_if<std::int64_t>(&c))
    return std::to_string(*i);
  if (const auto* d = std::get_if<double>(&c))
    return format_number(*d);
  return csv_escape(std::get<std::string>(c));
}

nlohmann::json cell_to_json(const Cell& c) {
  if (std::holds_alternative<std::monostate>(c))
    return nullptr;
  if (const auto* i = std::get_if<std::int64_t>(&c))
    return *i;
  if (const auto* d = std::get_if<double>(&c))
    return *d;
  return std::get<std::string>(c);
}

} // namespace

void write_csv(const ResultTable& t, std::ostream& out) {
  for (std::size_t i = 0; i < t.columns.size(); ++i) {
    if (i)
      out << ',';
    out << csv_escape(t.columns[i]);
  }
  out << '\n';
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i)
        out << ',';
      out << cell_to_csv(row[i]);
    }
    out << '\n';
  }
}

void write_json(const ResultTable& t, const RunMeta& meta, std::ostream& out) {
  nlohmann::ordered_json doc;
  doc["meta"]["command"] = meta.command;
  doc["meta"]["version"] = meta.version;
  nlohmann::ordered_json cfg = nlohmann::ordered_json::object();
  for (const auto& [k, v] : meta.config)
    cfg[k] = v;
  doc["meta"]["config"] = cfg;
  doc["rows"] = nlohmann::ordered_json::array();
  for (const auto& row : t.rows) {
    nlohmann::ordered_json jrow = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < row.size(); ++i)
      jrow[t.columns[i]] = cell_to_json(row[i]);
    doc["rows"].push_back(std::move(jrow));
  }
  out << doc.dump(2) << '\n';
}

void write_output(const ResultTable& t, OutputFormat format,
                  const std::string& path, const RunMeta& meta) {
  const bool to_stdout = path.empty() || path == "-";
  std::ofstream file;
  if (!to_stdout) {
    file.open(path, std::ios::binary); // LF endings on every platform
    if (!file)
      throw NumericsError("write_output: cannot open '" + path +
                          "' for writing");
  }
  std::ostream& out = to_stdout ? std::cout : file;
  if (format == OutputFormat::Csv)
    write_csv(t, out);
  else
    write_json(t, meta, out);
  out.flush();
  if (!to_stdout && !file)
    throw NumericsError("write_output: write to '" + path + "' failed");
}

} // namespace table
} // namespace qsix
