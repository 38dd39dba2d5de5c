#include "trigmeans/report.hpp"

#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace trigmeans {

std::string format_number(double v) {
  if (v == 0.0) v = 0.0;  // collapse -0
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

void Table::add_row(std::vector<std::string> cells) {
  if (cells.size() != header.size())
    throw std::logic_error("Table: row width does not match header");
  rows.push_back(std::move(cells));
}

void write_csv(std::ostream& out, const Table& table) {
  for (std::size_t c = 0; c < table.header.size(); ++c) {
    if (c) out << ',';
    out << table.header[c];
  }
  out << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out << ',';
      out << row[c];
    }
    out << '\n';
  }
}

namespace {

void write_json_string(std::ostream& out, const std::string& s) {
  out << '"';
  for (char ch : s) {
    if (ch == '"' || ch == '\\') out << '\\';
    out << ch;
  }
  out << '"';
}

}  // namespace

void write_json(std::ostream& out, const Table& table) {
  out << "[\n";
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    const auto& row = table.rows[r];
    out << "  {";
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out << ", ";
      write_json_string(out, table.header[c]);
      out << ": ";
      if (row[c].empty())
        out << "null";
      else if (table.types[c] == ColumnType::text)
        write_json_string(out, row[c]);
      else
        out << row[c];
    }
    out << '}' << (r + 1 < table.rows.size() ? "," : "") << '\n';
  }
  out << "]\n";
}

void write_table(std::ostream& out, const Table& table, OutputFormat format) {
  if (format == OutputFormat::csv)
    write_csv(out, table);
  else
    write_json(out, table);
}

}  // namespace trigmeans
