#include "report.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "qaran/format.hpp"

namespace qaran::cli {
namespace {

constexpr int kSchemaVersion = 1;

std::optional<double> as_number(const std::string& s) {
  if (s.empty()) return std::nullopt;
  double v = 0.0;
  const char* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc{} || ptr != end) return std::nullopt;
  return v;
}

bool is_integer_text(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-') ? 1 : 0;
  if (i == s.size()) return false;
  return std::all_of(s.begin() + static_cast<std::ptrdiff_t>(i), s.end(),
                     [](char c) { return c >= '0' && c <= '9'; });
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          cur += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        cur += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      out.push_back(std::move(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (quoted) throw std::runtime_error("csv: unterminated quoted field");
  out.push_back(std::move(cur));
  return out;
}

nlohmann::ordered_json cell_to_json(const Cell& c) {
  switch (c.kind) {
    case CellKind::Empty:
      return nullptr;
    case CellKind::Text:
      return c.text;
    case CellKind::Number:
      if (is_integer_text(c.text)) {
        if (c.text[0] == '-') return std::stoll(c.text);
        return std::stoull(c.text);
      }
      return *as_number(c.text);
  }
  return nullptr;
}

Cell cell_from_json(const nlohmann::ordered_json& j) {
  if (j.is_null()) return Cell::empty();
  if (j.is_string()) return Cell::str(j.get<std::string>());
  if (j.is_number_unsigned()) return Cell::uinteger(j.get<unsigned long long>());
  if (j.is_number_integer()) return Cell::integer(j.get<long long>());
  if (j.is_number_float()) return Cell::num(j.get<double>());
  throw std::runtime_error("json: unsupported cell type");
}

bool cells_match(const Cell& a, const Cell& b) {
  if (a.text == b.text) return true;
  const auto x = as_number(a.text);
  const auto y = as_number(b.text);
  return x && y && *x == *y;
}

}  // namespace

Cell Cell::num(double v) {
  if (!std::isfinite(v)) return str(format_shortest(v));
  return {CellKind::Number, format_shortest(v)};
}

Cell Cell::fixed(double v, int decimals) { return {CellKind::Number, format_fixed(v, decimals)}; }

Cell Cell::integer(long long v) { return {CellKind::Number, std::to_string(v)}; }

Cell Cell::uinteger(unsigned long long v) { return {CellKind::Number, std::to_string(v)}; }

void Table::add_row(std::vector<Cell> row) {
  if (row.size() != columns.size()) {
    throw std::logic_error("table '" + name + "': row width " + std::to_string(row.size()) +
                           " does not match " + std::to_string(columns.size()) + " columns");
  }
  rows.push_back(std::move(row));
}

Format parse_format(const std::string& name) {
  if (name == "csv") return Format::Csv;
  if (name == "json") return Format::Json;
  if (name == "table" || name == "text") return Format::Text;
  throw std::invalid_argument("unknown format '" + name + "'");
}

std::string render(const Report& report, Format format) {
  switch (format) {
    case Format::Csv:
      return render_csv(report);
    case Format::Json:
      return render_json(report);
    case Format::Text:
      return render_text(report);
  }
  return {};
}

// Tables are separated by a blank line; "# table:" and "# note:" lines carry
// the metadata so read_csv can rebuild the report.
std::string render_csv(const Report& report) {
  std::string out = "# qaran " + report.command + "\n";
  for (std::size_t t = 0; t < report.tables.size(); ++t) {
    const Table& tab = report.tables[t];
    if (t > 0) out += '\n';
    out += "# table: " + tab.name + '\n';
    for (const auto& n : tab.notes) out += "# note: " + n + '\n';
    for (std::size_t i = 0; i < tab.columns.size(); ++i) {
      if (i) out += ',';
      out += csv_escape(tab.columns[i]);
    }
    out += '\n';
    for (const auto& row : tab.rows) {
      for (std::size_t i = 0; i < row.size(); ++i) {
        if (i) out += ',';
        out += csv_escape(row[i].text);
      }
      out += '\n';
    }
  }
  return out;
}

std::string render_json(const Report& report) {
  nlohmann::ordered_json root;
  root["schema_version"] = kSchemaVersion;
  root["command"] = report.command;
  root["tables"] = nlohmann::ordered_json::array();
  for (const Table& tab : report.tables) {
    nlohmann::ordered_json jt;
    jt["name"] = tab.name;
    jt["columns"] = tab.columns;
    jt["rows"] = nlohmann::ordered_json::array();
    for (const auto& row : tab.rows) {
      auto jr = nlohmann::ordered_json::array();
      for (const Cell& c : row) jr.push_back(cell_to_json(c));
      jt["rows"].push_back(std::move(jr));
    }
    jt["notes"] = tab.notes;
    root["tables"].push_back(std::move(jt));
  }
  return root.dump(2) + '\n';
}

std::string render_text(const Report& report) {
  std::ostringstream out;
  for (std::size_t t = 0; t < report.tables.size(); ++t) {
    const Table& tab = report.tables[t];
    if (t > 0) out << '\n';
    out << tab.name << '\n';
    std::vector<std::size_t> width(tab.columns.size(), 0);
    for (std::size_t i = 0; i < tab.columns.size(); ++i) width[i] = tab.columns[i].size();
    for (const auto& row : tab.rows) {
      for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].text.size());
    }
    auto emit = [&](const std::vector<std::string>& cells, const std::vector<bool>& right) {
      std::string line;
      for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) line += "  ";
        const std::string pad(width[i] - cells[i].size(), ' ');
        line += right[i] ? pad + cells[i] : cells[i] + pad;
      }
      while (!line.empty() && line.back() == ' ') line.pop_back();
      out << line << '\n';
    };
    emit(tab.columns, std::vector<bool>(tab.columns.size(), false));
    std::string rule;
    for (std::size_t i = 0; i < width.size(); ++i) {
      if (i) rule += "  ";
      rule += std::string(width[i], '-');
    }
    out << rule << '\n';
    for (const auto& row : tab.rows) {
      std::vector<std::string> cells;
      std::vector<bool> right;
      for (const Cell& c : row) {
        cells.push_back(c.text);
        right.push_back(c.kind == CellKind::Number);
      }
      emit(cells, right);
    }
    for (const auto& n : tab.notes) out << "note: " << n << '\n';
  }
  return out.str();
}

Report read_csv(const std::string& text) {
  Report rep;
  std::istringstream in(text);
  std::string line;
  Table* cur = nullptr;
  bool need_header = false;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) {
      cur = nullptr;
      continue;
    }
    if (line.rfind("# qaran ", 0) == 0) {
      rep.command = line.substr(8);
      continue;
    }
    if (line.rfind("# table: ", 0) == 0) {
      rep.tables.push_back(Table{line.substr(9), {}, {}, {}});
      cur = &rep.tables.back();
      need_header = true;
      continue;
    }
    if (line.rfind("# note: ", 0) == 0) {
      if (!cur) throw std::runtime_error("csv: note outside a table");
      cur->notes.push_back(line.substr(8));
      continue;
    }
    if (!cur) throw std::runtime_error("csv: data line outside a table");
    auto fields = split_csv_line(line);
    if (need_header) {
      cur->columns = std::move(fields);
      need_header = false;
      continue;
    }
    if (fields.size() != cur->columns.size()) throw std::runtime_error("csv: ragged row in " + cur->name);
    std::vector<Cell> row;
    for (auto& f : fields) {
      if (f.empty()) {
        row.push_back(Cell::empty());
      } else if (as_number(f)) {
        row.push_back(Cell{CellKind::Number, std::move(f)});
      } else {
        row.push_back(Cell::str(std::move(f)));
      }
    }
    cur->rows.push_back(std::move(row));
  }
  return rep;
}

Report read_json(const std::string& text) {
  nlohmann::ordered_json root;
  try {
    root = nlohmann::ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error(std::string("json: ") + e.what());
  }
  if (root.value("schema_version", 0) != kSchemaVersion) throw std::runtime_error("json: unsupported schema_version");
  Report rep;
  rep.command = root.at("command").get<std::string>();
  for (const auto& jt : root.at("tables")) {
    Table tab;
    tab.name = jt.at("name").get<std::string>();
    tab.columns = jt.at("columns").get<std::vector<std::string>>();
    for (const auto& jr : jt.at("rows")) {
      std::vector<Cell> row;
      for (const auto& jc : jr) row.push_back(cell_from_json(jc));
      if (row.size() != tab.columns.size()) throw std::runtime_error("json: ragged row in " + tab.name);
      tab.rows.push_back(std::move(row));
    }
    tab.notes = jt.at("notes").get<std::vector<std::string>>();
    rep.tables.push_back(std::move(tab));
  }
  return rep;
}

bool equivalent(const Report& a, const Report& b) {
  if (a.command != b.command || a.tables.size() != b.tables.size()) return false;
  for (std::size_t t = 0; t < a.tables.size(); ++t) {
    const Table& x = a.tables[t];
    const Table& y = b.tables[t];
    if (x.name != y.name || x.columns != y.columns || x.notes != y.notes || x.rows.size() != y.rows.size()) {
      return false;
    }
    for (std::size_t r = 0; r < x.rows.size(); ++r) {
      for (std::size_t c = 0; c < x.rows[r].size(); ++c) {
        if (!cells_match(x.rows[r][c], y.rows[r][c])) return false;
      }
    }
  }
  return true;
}

}  // namespace qaran::cli
