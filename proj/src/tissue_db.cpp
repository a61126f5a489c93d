#include "mqslink/tissue_db.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <optional>
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

double parse_number(const std::string& origin, int line, const std::string& text) {
  char* end = nullptr;
  const double value = std::strtod(text.c_str(), &end);
  if (end == text.c_str() || *end != '\0') {
    fail(origin, line, "cannot parse number '" + text + "'");
  }
  return value;
}

constexpr int kMaxTerms = 8;

struct RecordBuilder {
  std::string name;
  int start_line = 0;
  ColeColeModel model;
  std::array<std::array<bool, 3>, kMaxTerms> seen{};  // delta_eps, tau, alpha
  int max_term = 0;
  bool has_eps_inf = false;
  bool has_sigma = false;

  ColeColeModel finish(const std::string& origin) const {
    if (!has_eps_inf) fail(origin, start_line, name + ": missing eps_inf");
    if (!has_sigma) fail(origin, start_line, name + ": missing sigma_ionic");
    ColeColeModel out = model;
    out.tissue_name = name;
    out.terms.resize(max_term);
    for (int i = 0; i < max_term; ++i) {
      static const char* kField[] = {"delta_eps", "tau", "alpha"};
      for (int f = 0; f < 3; ++f) {
        if (!seen[i][f]) {
          fail(origin, start_line,
               name + ": incomplete term group, missing term." + std::to_string(i + 1) + "." +
                   kField[f]);
        }
      }
    }
    out.validate();  // invariant violations name the field
    return out;
  }
};

}  // namespace

TissueDb parse_tissue_db(std::istream& in, const std::string& origin) {
  TissueDb db;
  std::optional<RecordBuilder> current;
  std::string raw;
  int line = 0;
  bool saw_content = false;

  auto flush = [&] {
    if (!current) return;
    if (db.count(current->name) != 0) {
      fail(origin, current->start_line, "duplicate tissue '" + current->name + "'");
    }
    db.emplace(current->name, current->finish(origin));
    current.reset();
  };

  while (std::getline(in, raw)) {
    ++line;
    const auto hash = raw.find('#');
    std::string text = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
    if (text.empty()) continue;
    saw_content = true;

    const auto eq = text.find('=');
    if (eq == std::string::npos) fail(origin, line, "expected 'key = value'");
    const std::string key = trim(text.substr(0, eq));
    const std::string value = trim(text.substr(eq + 1));
    if (key.empty() || value.empty()) fail(origin, line, "expected 'key = value'");

    if (key == "name") {
      flush();
      current.emplace();
      current->name = value;
      current->start_line = line;
      current->model.terms.resize(kMaxTerms);
      continue;
    }
    if (!current) fail(origin, line, "'" + key + "' before any 'name' record");

    if (key == "eps_inf") {
      current->model.eps_inf = parse_number(origin, line, value);
      current->has_eps_inf = true;
    } else if (key == "sigma_ionic") {
      current->model.sigma_ionic = parse_number(origin, line, value);
      current->has_sigma = true;
    } else if (key.rfind("term.", 0) == 0) {
      const auto dot = key.find('.', 5);
      if (dot == std::string::npos) fail(origin, line, "malformed term key '" + key + "'");
      const int index = static_cast<int>(parse_number(origin, line, key.substr(5, dot - 5)));
      if (index < 1 || index > kMaxTerms) {
        fail(origin, line, "term index out of range in '" + key + "'");
      }
      const std::string field = key.substr(dot + 1);
      const double number = parse_number(origin, line, value);
      auto& term = current->model.terms[index - 1];
      auto& seen = current->seen[index - 1];
      if (field == "delta_eps") {
        term.delta_eps = number;
        seen[0] = true;
      } else if (field == "tau") {
        term.tau = number;
        seen[1] = true;
      } else if (field == "alpha") {
        term.alpha = number;
        seen[2] = true;
      } else {
        fail(origin, line, "unknown term field '" + field + "'");
      }
      current->max_term = std::max(current->max_term, index);
    } else {
      fail(origin, line, "unknown key '" + key + "'");
    }
  }
  flush();

  if (!saw_content) throw validation_error(origin + ": empty tissue database");
  if (db.empty()) throw validation_error(origin + ": no tissue records found");
  return db;
}

TissueDb load_tissue_db(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw validation_error("cannot open tissue database '" + path.string() + "'");
  }
  return parse_tissue_db(in, path.string());
}

const ColeColeModel& find_tissue(const TissueDb& db, const std::string& name) {
  const auto it = db.find(name);
  if (it == db.end()) {
    std::ostringstream msg;
    msg << "unknown tissue '" << name << "'; available:";
    for (const auto& [key, unused] : db) msg << " " << key;
    throw validation_error(msg.str());
  }
  return it->second;
}

std::filesystem::path default_tissue_db_path() {
  if (const char* env = std::getenv("MQS_TISSUE_DB"); env != nullptr && *env != '\0') {
    return env;
  }
  return "data/tissues.txt";
}

}  // namespace mqs
