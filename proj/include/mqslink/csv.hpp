#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace mqs {

// One CSV column, numeric or text.  Numeric cells are emitted with enough
// digits (%.17g) that re-parsing reproduces the doubles bit-exactly; +-inf
// and nan are emitted as the tokens inf / -inf / nan.
struct CsvColumn {
  std::string name;  // includes the unit, e.g. "frequency (Hz)"
  bool numeric = true;
  std::vector<double> values;
  std::vector<std::string> labels;  // used when !numeric

  std::size_t size() const { return numeric ? values.size() : labels.size(); }
};

// Tabular payload with `# key: value` provenance comment lines.
struct CsvTable {
  std::vector<std::pair<std::string, std::string>> provenance;
  std::vector<CsvColumn> columns;
};

std::string format_double(double value);

void write_csv(const CsvTable& table, std::ostream& out);
std::string to_csv_string(const CsvTable& table);
void save_csv(const CsvTable& table, const std::string& path);

// Parses a CSV produced by write_csv (RFC-4180 quoting, `#` comments).
// Columns whose every cell parses as a double come back numeric.  Malformed
// input raises validation_error with the origin and line number.
CsvTable parse_csv(std::istream& in, const std::string& origin);
CsvTable load_csv(const std::string& path);

}  // namespace mqs
