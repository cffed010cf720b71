#include "casimir/output.hpp"

#include <charconv>
#include <cmath>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace casimir::output {

void OutputRecord::add_row(std::vector<Cell> row) {
  if (row.size() != columns.size()) {
    throw std::invalid_argument("OutputRecord: row has " + std::to_string(row.size()) +
                                " cells, expected " + std::to_string(columns.size()));
  }
  rows.push_back(std::move(row));
}

std::string format_number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::scientific, 16);
  return std::string(buf, res.ptr);
}

Format parse_format(const std::string& name) {
  if (name == "csv" || name == "CSV") return Format::Csv;
  if (name == "json" || name == "JSON") return Format::Json;
  throw std::invalid_argument("unknown output format '" + name + "'");
}

namespace {

std::string cell_text(const Cell& c) {
  if (const double* x = std::get_if<double>(&c)) return format_number(*x);
  return std::get<std::string>(c);
}

nlohmann::ordered_json cell_json(const Cell& c) {
  if (const double* x = std::get_if<double>(&c)) {
    if (std::isfinite(*x)) return *x;
    return nullptr;
  }
  return std::get<std::string>(c);
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream ss(line);
  while (std::getline(ss, cur, sep)) parts.push_back(cur);
  if (!line.empty() && line.back() == sep) parts.emplace_back();
  return parts;
}

Cell parse_cell(const std::string& text) {
  if (text == "nan") return std::numeric_limits<double>::quiet_NaN();
  if (text == "inf") return std::numeric_limits<double>::infinity();
  if (text == "-inf") return -std::numeric_limits<double>::infinity();
  double x = 0.0;
  const char* end = text.data() + text.size();
  const auto res = std::from_chars(text.data(), end, x);
  if (res.ec == std::errc() && res.ptr == end && !text.empty()) return x;
  return text;
}

}  // namespace

void write_csv(const OutputRecord& record, std::ostream& out) {
  for (const auto& [key, value] : record.meta) out << "# " << key << ": " << value << '\n';
  for (std::size_t i = 0; i < record.columns.size(); ++i) {
    out << (i ? "," : "") << record.columns[i];
  }
  out << '\n';
  for (const auto& row : record.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << cell_text(row[i]);
    out << '\n';
  }
}

void write_json(const OutputRecord& record, std::ostream& out) {
  nlohmann::ordered_json doc;
  doc["meta"] = nlohmann::ordered_json::object();
  for (const auto& [key, value] : record.meta) doc["meta"][key] = value;
  doc["columns"] = record.columns;
  doc["rows"] = nlohmann::ordered_json::array();
  for (const auto& row : record.rows) {
    nlohmann::ordered_json r = nlohmann::ordered_json::array();
    for (const auto& c : row) r.push_back(cell_json(c));
    doc["rows"].push_back(std::move(r));
  }
  out << doc.dump(2) << '\n';
}

void write(const OutputRecord& record, Format format, std::ostream& out) {
  if (format == Format::Json) {
    write_json(record, out);
  } else {
    write_csv(record, out);
  }
}

OutputRecord read_csv(std::istream& in) {
  OutputRecord record;
  std::string line;
  bool have_columns = false;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line.front() == '#') {
      const auto colon = line.find(": ");
      if (colon != std::string::npos && line.size() > 2) {
        record.meta.emplace_back(line.substr(2, colon - 2), line.substr(colon + 2));
      }
      continue;
    }
    if (!have_columns) {
      record.columns = split(line, ',');
      have_columns = true;
      continue;
    }
    std::vector<Cell> row;
    for (const auto& text : split(line, ',')) row.push_back(parse_cell(text));
    record.add_row(std::move(row));
  }
  return record;
}

}  // namespace casimir::output
