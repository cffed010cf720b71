#pragma once

// Tabular output shared by all CLI commands.
//
// CSV layout: '#'-prefixed "key: value" header lines, one line of column
// names, then one comma-separated row per record. Numbers are written in
// scientific notation with 17 significant digits, which round-trips every
// double exactly. JSON carries the same content as {meta, columns, rows}.

#include <iosfwd>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace casimir::output {

using Cell = std::variant<double, std::string>;

enum class Format { Csv, Json };

struct OutputRecord {
  std::vector<std::pair<std::string, std::string>> meta;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  /// Throws std::invalid_argument if a row's width differs from columns.
  void add_row(std::vector<Cell> row);
};

/// Fixed 17-significant-digit scientific form; "nan", "inf", "-inf" for non-finite values.
std::string format_number(double x);

Format parse_format(const std::string& name);

void write_csv(const OutputRecord& record, std::ostream& out);
void write_json(const OutputRecord& record, std::ostream& out);
void write(const OutputRecord& record, Format format, std::ostream& out);

/// Reads back what write_csv produced. Cells that parse completely as a
/// number become doubles, everything else stays a string.
OutputRecord read_csv(std::istream& in);

}  // namespace casimir::output
