#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qaran::cli {

enum class CellKind { Empty, Text, Number };

/// A pre-formatted cell. Numbers keep their rendered text so every output
/// format carries exactly the same digits.
struct Cell {
  CellKind kind = CellKind::Empty;
  std::string text;

  static Cell empty() { return {}; }
  static Cell str(std::string s) { return {CellKind::Text, std::move(s)}; }
  /// Shortest round-trip representation.
  static Cell num(double v);
  static Cell fixed(double v, int decimals);
  static Cell integer(long long v);
  static Cell uinteger(unsigned long long v);

  friend bool operator==(const Cell&, const Cell&) = default;
};

struct Table {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  std::vector<std::string> notes;

  void add_row(std::vector<Cell> row);
};

struct Report {
  std::string command;
  std::vector<Table> tables;
};

enum class Format { Csv, Json, Text };

Format parse_format(const std::string& name);

std::string render(const Report& report, Format format);
std::string render_csv(const Report& report);
std::string render_json(const Report& report);
std::string render_text(const Report& report);

/// Readers for the tool's own CSV and JSON output. Throw std::runtime_error on
/// malformed input.
Report read_csv(const std::string& text);
Report read_json(const std::string& text);

/// Same tables, columns and notes; cells match by text, or numerically when
/// both sides parse as numbers.
bool equivalent(const Report& a, const Report& b);

}  // namespace qaran::cli
