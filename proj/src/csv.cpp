#include "mqslink/csv.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>

#include "mqslink/errors.hpp"

namespace mqs {
namespace {

bool needs_quoting(const std::string& field) {
  return field.find_first_of(",\"\n\r") != std::string::npos;
}

std::string quote(const std::string& field) {
  if (!needs_quoting(field)) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

// Splits one logical CSV record (quotes already balanced) into fields.
std::vector<std::string> split_record(const std::string& line, const std::string& origin,
                                      int line_no) {
  std::vector<std::string> fields;
  std::string current;
  bool in_quotes = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (in_quotes) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          current += '"';
          ++i;
        } else {
          in_quotes = false;
        }
      } else {
        current += c;
      }
    } else if (c == '"') {
      if (!current.empty()) {
        throw validation_error(origin + ":" + std::to_string(line_no) +
                               ": quote inside unquoted field");
      }
      in_quotes = true;
    } else if (c == ',') {
      fields.push_back(std::move(current));
      current.clear();
    } else if (c == '\r') {
      // tolerated at end of line
    } else {
      current += c;
    }
  }
  if (in_quotes) {
    throw validation_error(origin + ":" + std::to_string(line_no) + ": unterminated quote");
  }
  fields.push_back(std::move(current));
  return fields;
}

bool parse_double(const std::string& text, double* out) {
  if (text.empty()) return false;
  char* end = nullptr;
  const double v = std::strtod(text.c_str(), &end);
  if (end == text.c_str() || *end != '\0') return false;
  *out = v;
  return true;
}

}  // namespace

std::string format_double(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buffer[40];
  std::snprintf(buffer, sizeof buffer, "%.17g", value);
  return buffer;
}

void write_csv(const CsvTable& table, std::ostream& out) {
  for (const auto& [key, value] : table.provenance) {
    out << "# " << key << ": " << value << "\n";
  }
  for (std::size_t c = 0; c < table.columns.size(); ++c) {
    out << (c == 0 ? "" : ",") << quote(table.columns[c].name);
  }
  out << "\n";
  std::size_t rows = 0;
  for (const auto& col : table.columns) rows = std::max(rows, col.size());
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < table.columns.size(); ++c) {
      const auto& col = table.columns[c];
      if (c != 0) out << ",";
      if (r >= col.size()) continue;
      out << (col.numeric ? format_double(col.values[r]) : quote(col.labels[r]));
    }
    out << "\n";
  }
}

std::string to_csv_string(const CsvTable& table) {
  std::ostringstream ss;
  write_csv(table, ss);
  return ss.str();
}

void save_csv(const CsvTable& table, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw validation_error("cannot open '" + path + "' for writing");
  write_csv(table, out);
  if (!out) throw validation_error("write failed for '" + path + "'");
}

CsvTable parse_csv(std::istream& in, const std::string& origin) {
  CsvTable table;
  std::string line;
  int line_no = 0;
  bool have_header = false;
  std::vector<std::vector<std::string>> raw_columns;

  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line[0] == '#') {
      std::string body = line.substr(1);
      if (!body.empty() && body.front() == ' ') body.erase(0, 1);
      const auto colon = body.find(':');
      if (colon != std::string::npos) {
        std::string key = body.substr(0, colon);
        std::string value = body.substr(colon + 1);
        if (!value.empty() && value.front() == ' ') value.erase(0, 1);
        table.provenance.emplace_back(std::move(key), std::move(value));
      }
      continue;
    }
    const auto fields = split_record(line, origin, line_no);
    if (!have_header) {
      for (const auto& name : fields) {
        table.columns.push_back({name, true, {}, {}});
        raw_columns.emplace_back();
      }
      have_header = true;
      continue;
    }
    if (fields.size() != table.columns.size()) {
      throw validation_error(origin + ":" + std::to_string(line_no) + ": expected " +
                             std::to_string(table.columns.size()) + " fields, got " +
                             std::to_string(fields.size()));
    }
    for (std::size_t c = 0; c < fields.size(); ++c) raw_columns[c].push_back(fields[c]);
  }
  if (!have_header) throw validation_error(origin + ": no header row found");

  for (std::size_t c = 0; c < table.columns.size(); ++c) {
    auto& col = table.columns[c];
    col.numeric = true;
    for (const auto& cell : raw_columns[c]) {
      double unused;
      if (!parse_double(cell, &unused)) {
        col.numeric = false;
        break;
      }
    }
    if (col.numeric) {
      col.values.reserve(raw_columns[c].size());
      for (const auto& cell : raw_columns[c]) {
        double v = 0.0;
        parse_double(cell, &v);
        col.values.push_back(v);
      }
    } else {
      col.labels = std::move(raw_columns[c]);
    }
  }
  return table;
}

CsvTable load_csv(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw validation_error("cannot open '" + path + "'");
  return parse_csv(in, path);
}

}  // namespace mqs
