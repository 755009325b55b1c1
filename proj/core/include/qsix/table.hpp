#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

namespace qsix {

/// One table cell: empty, integer, real, or text.
using Cell = std::variant<std::monostate, std::int64_t, double, std::string>;

/// Column-named tabular result set, the exchange format between the scan
/// engine and the writers.
struct ResultTable {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  void add_row(std::vector<Cell> row);
};

enum class OutputFormat { Csv, Json };

/// Run provenance echoed into JSON output: command, library version, and
/// the flat effective configuration.
struct RunMeta {
  std::string command;
  std::string version;
  std::vector<std::pair<std::string, std::string>> config;
};

namespace table {

OutputFormat parse_format(const std::string& name); // "csv" | "json"

/// CSV: header row, comma separators, '.' decimal point, 15 significant
/// digits, LF endings, no trailing separator.  Meta is not emitted.
void write_csv(const ResultTable& t, std::ostream& out);

/// JSON: {"meta": {"command", "version", "config"}, "rows": [{...}]}.
/// Deterministic for a fixed table.
void write_json(const ResultTable& t, const RunMeta& meta, std::ostream& out);

/// Dispatches on format; writes to `path`, or to stdout when path is "-"
/// or empty.  I/O failures name the path.
void write_output(const ResultTable& t, OutputFormat format,
                  const std::string& path, const RunMeta& meta);

/// The exact numeric rendering used by the CSV writer (15 significant
/// digits).
std::string format_number(double v);

} // namespace table
} // namespace qsix
