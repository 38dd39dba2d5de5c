#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace trigmeans {

/// All numeric output goes through this: %.12g, '.' decimal, no locale.
std::string format_number(double v);

enum class ColumnType { text, integer, number };

enum class OutputFormat { csv, json };

/// A flat table of pre-formatted cells.  An empty cell means "missing"
/// (empty CSV field, JSON null).
struct Table {
  std::vector<std::string> header;
  std::vector<ColumnType> types;
  std::vector<std::vector<std::string>> rows;

  void add_row(std::vector<std::string> cells);
};

void write_csv(std::ostream& out, const Table& table);
void write_json(std::ostream& out, const Table& table);
void write_table(std::ostream& out, const Table& table, OutputFormat format);

}  // namespace trigmeans
