#include "mqslink/scenario.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "mqslink/errors.hpp"

namespace mqs {
namespace {

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return {};
  const auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

[[noreturn]] void fail(const std::string& origin, int line, const std::string& message) {
  throw validation_error(origin + ":" + std::to_string(line) + ": " + message);
}

class Parser {
 public:
  Parser(Scenario& s, const std::string& origin) : s_(s), origin_(origin) {}

  void handle(const std::string& section, const std::string& key, const std::string& value,
              int line) {
    line_ = line;
    if (section == "scenario") return scenario_key(key, value);
    if (section == "tx") return loop_key(s_.tx, s_.l_tx_override, key, value);
    if (section == "rx") return loop_key(s_.rx, s_.l_rx_override, key, value);
    if (section == "link") return link_key(key, value);
    if (section == "body") return body_key(key, value);
    if (section == "sweep") return sweep_key(key, value);
    if (section == "report") return report_key(key, value);
    if (section == "output") return output_key(key, value);
    fail(origin_, line, "unknown section [" + section + "]");
  }

 private:
  double number(const std::string& value) const {
    char* end = nullptr;
    const double v = std::strtod(value.c_str(), &end);
    if (end == value.c_str() || *end != '\0') {
      fail(origin_, line_, "cannot parse number '" + value + "'");
    }
    return v;
  }

  int integer(const std::string& value) const {
    const double v = number(value);
    const int i = static_cast<int>(v);
    if (static_cast<double>(i) != v) fail(origin_, line_, "expected integer, got '" + value + "'");
    return i;
  }

  Eigen::Vector3d vector3(const std::string& value) const {
    std::istringstream ss(value);
    double x, y, z;
    if (!(ss >> x >> y >> z)) fail(origin_, line_, "expected three numbers, got '" + value + "'");
    std::string rest;
    if (ss >> rest) fail(origin_, line_, "trailing content after vector: '" + rest + "'");
    return {x, y, z};
  }

  [[noreturn]] void unknown(const std::string& key) const {
    fail(origin_, line_, "unknown key '" + key + "'");
  }

  void scenario_key(const std::string& key, const std::string& value) {
    if (key == "name") {
      s_.name = value;
    } else {
      unknown(key);
    }
  }

  void loop_key(Loop& loop, std::optional<double>& l_override, const std::string& key,
                const std::string& value) {
    if (key == "radius") loop.radius = number(value);
    else if (key == "wire_radius") loop.wire_radius = number(value);
    else if (key == "turns") loop.turns = integer(value);
    else if (key == "center") loop.center = vector3(value);
    else if (key == "axis") {
      loop.axis = vector3(value);
      const double n = loop.axis.norm();
      if (n <= 0.0) fail(origin_, line_, "axis must be nonzero");
      loop.axis /= n;
    } else if (key == "inductance") l_override = number(value);
    else unknown(key);
  }

  void link_key(const std::string& key, const std::string& value) {
    if (key == "cases") {
      s_.cases.clear();
      if (value == "all") {
        s_.cases = {TerminationCase::vna_50, TerminationCase::low_source,
                    TerminationCase::capacitive_load,
                    TerminationCase::low_source_capacitive_load};
        return;
      }
      std::istringstream ss(value);
      std::string token;
      while (std::getline(ss, token, ',')) {
        token = trim(token);
        const auto c = termination_case_from_string(token);
        if (!c) fail(origin_, line_, "unknown termination case '" + token + "'");
        s_.cases.push_back(*c);
      }
      if (s_.cases.empty()) fail(origin_, line_, "no termination cases given");
    } else if (key == "z0") s_.params.z0 = number(value);
    else if (key == "low_source_resistance") s_.params.source_resistance_low = number(value);
    else if (key == "load_capacitance") s_.params.load_capacitance = number(value);
    else if (key == "mutual") s_.mutual_override = number(value);
    else if (key == "rod_mu_r") s_.rod_mu_r = number(value);
    else if (key == "rod_aspect") s_.rod_aspect = number(value);
    else unknown(key);
  }

  void body_key(const std::string& key, const std::string& value) {
    if (key == "tissue") s_.tissue = value;
    else if (key == "body_dimension") s_.body_dimension = number(value);
    else if (key == "arm_radius") s_.arm_radius = number(value);
    else if (key == "eddy_model") {
      if (value == "diffusion") s_.eddy_displacement = false;
      else if (value == "full") s_.eddy_displacement = true;
      else fail(origin_, line_, "eddy_model must be 'diffusion' or 'full'");
    } else unknown(key);
  }

  void sweep_key(const std::string& key, const std::string& value) {
    if (key == "axis") {
      if (value == "frequency") s_.axis = SweepAxis::frequency;
      else if (value == "distance") s_.axis = SweepAxis::distance;
      else if (value == "offset") s_.axis = SweepAxis::offset;
      else fail(origin_, line_, "axis must be frequency, distance or offset");
    } else if (key == "min") s_.sweep_min = number(value);
    else if (key == "max") s_.sweep_max = number(value);
    else if (key == "points") s_.points = integer(value);
    else if (key == "spacing") {
      if (value == "log") s_.log_spacing = true;
      else if (value == "linear") s_.log_spacing = false;
      else fail(origin_, line_, "spacing must be log or linear");
    } else if (key == "frequency") s_.fixed_frequency = number(value);
    else if (key == "offset_min") s_.offset_min = number(value);
    else if (key == "offset_max") s_.offset_max = number(value);
    else if (key == "offset_points") s_.offset_points = integer(value);
    else if (key == "segments") s_.segments = integer(value);
    else unknown(key);
  }

  void report_key(const std::string& key, const std::string& value) {
    if (key == "kind") {
      if (value == "tissue") s_.report_kind = ReportKind::tissue;
      else if (value == "regime") s_.report_kind = ReportKind::regime;
      else fail(origin_, line_, "report kind must be tissue or regime");
    } else if (key == "interpolated") {
      if (value == "off") s_.interpolated = InterpolatedMode::off;
      else if (value == "on") s_.interpolated = InterpolatedMode::on;
      else if (value == "both") s_.interpolated = InterpolatedMode::both;
      else fail(origin_, line_, "interpolated must be off, on or both");
    } else if (key == "interp_f_low") s_.interp_f_low = number(value);
    else if (key == "interp_f_high") s_.interp_f_high = number(value);
    else if (key == "interp_domain") {
      if (value == "linear") s_.interp_domain = InterpolationDomain::linear_frequency;
      else if (value == "log") s_.interp_domain = InterpolationDomain::linear_log_frequency;
      else fail(origin_, line_, "interp_domain must be linear or log");
    } else unknown(key);
  }

  void output_key(const std::string& key, const std::string& value) {
    if (key == "csv") s_.out_csv = value;
    else if (key == "svg") s_.out_svg = value;
    else unknown(key);
  }

  Scenario& s_;
  const std::string& origin_;
  int line_ = 0;
};

}  // namespace

void Scenario::validate() const {
  if (name.empty()) throw validation_error(origin + ": [scenario] name is required");
  tx.validate();
  rx.validate();
  if (l_tx_override && !(*l_tx_override > 0.0)) {
    throw validation_error(origin + ": tx inductance override must be > 0");
  }
  if (l_rx_override && !(*l_rx_override > 0.0)) {
    throw validation_error(origin + ": rx inductance override must be > 0");
  }
  if (!(sweep_min > 0.0) || !(sweep_min < sweep_max)) {
    throw validation_error(origin + ": sweep range must satisfy 0 < min < max");
  }
  if (points < 2) throw validation_error(origin + ": sweep points must be >= 2");
  if (axis != SweepAxis::frequency && !(fixed_frequency > 0.0)) {
    throw validation_error(origin + ": fixed sweep frequency must be > 0");
  }
  if (axis == SweepAxis::offset) {
    if (!(offset_min >= 0.0) || !(offset_min < offset_max)) {
      throw validation_error(origin + ": offset range must satisfy 0 <= min < max");
    }
    if (offset_points < 2) throw validation_error(origin + ": offset_points must be >= 2");
  }
  if (segments < 64) throw validation_error(origin + ": segments must be >= 64");
  if (!(body_dimension > 0.0) || !(arm_radius > 0.0)) {
    throw validation_error(origin + ": body dimensions must be > 0");
  }
  const bool needs_cap =
      std::find_if(cases.begin(), cases.end(), [](TerminationCase c) {
        return c == TerminationCase::capacitive_load ||
               c == TerminationCase::low_source_capacitive_load;
      }) != cases.end();
  if (needs_cap && !params.load_capacitance) {
    throw validation_error(origin + ": capacitive termination cases need load_capacitance");
  }
  if (rod_mu_r.has_value() != rod_aspect.has_value()) {
    throw validation_error(origin + ": rod_mu_r and rod_aspect must be given together");
  }
  if (report_kind != ReportKind::none && interpolated != InterpolatedMode::off) {
    if (!(interp_f_low > 0.0) || !(interp_f_low < interp_f_high)) {
      throw validation_error(origin + ": interpolation anchors must satisfy 0 < low < high");
    }
  }
}

std::uint64_t fnv1a_hash(std::string_view bytes) {
  std::uint64_t hash = 1469598103934665603ull;
  for (unsigned char c : bytes) {
    hash ^= c;
    hash *= 1099511628211ull;
  }
  return hash;
}

Scenario parse_scenario(std::istream& in, const std::string& origin) {
  std::ostringstream buffer;
  buffer << in.rdbuf();
  const std::string content = buffer.str();

  Scenario s;
  s.origin = origin;
  s.config_hash = fnv1a_hash(content);

  Parser parser(s, origin);
  std::istringstream lines(content);
  std::string raw;
  std::string section;
  int line_no = 0;
  while (std::getline(lines, raw)) {
    ++line_no;
    const auto hash = raw.find('#');
    const std::string text = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
    if (text.empty()) continue;
    if (text.front() == '[') {
      if (text.back() != ']') fail(origin, line_no, "malformed section header");
      section = trim(text.substr(1, text.size() - 2));
      continue;
    }
    const auto eq = text.find('=');
    if (eq == std::string::npos) fail(origin, line_no, "expected 'key = value'");
    const std::string key = trim(text.substr(0, eq));
    const std::string value = trim(text.substr(eq + 1));
    if (key.empty() || value.empty()) fail(origin, line_no, "expected 'key = value'");
    if (section.empty()) fail(origin, line_no, "key before any [section]");
    parser.handle(section, key, value, line_no);
  }

  if (s.out_csv.empty()) s.out_csv = s.name + ".csv";
  if (s.out_svg.empty()) s.out_svg = s.name + ".svg";
  s.validate();
  return s;
}

Scenario load_scenario(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw validation_error("cannot open scenario '" + path.string() + "'");
  return parse_scenario(in, path.string());
}

}  // namespace mqs
