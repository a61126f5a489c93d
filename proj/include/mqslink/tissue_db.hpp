#pragma once

#include <filesystem>
#include <istream>
#include <map>
#include <string>

#include "mqslink/cole_cole.hpp"

namespace mqs {

using TissueDb = std::map<std::string, ColeColeModel>;

// Tissue database file format: UTF-8 text, `#` comments, `key = value` lines.
// Each record starts with `name = <tissue>` followed by `eps_inf`,
// `sigma_ionic` and term groups `term.N.delta_eps`, `term.N.tau`,
// `term.N.alpha` (N = 1..8, contiguous).  Parse errors carry the origin and
// line number; invariant violations name the offending field.
TissueDb parse_tissue_db(std::istream& in, const std::string& origin);

TissueDb load_tissue_db(const std::filesystem::path& path);

// Lookup that lists the available names on failure.
const ColeColeModel& find_tissue(const TissueDb& db, const std::string& name);

// MQS_TISSUE_DB environment override, else "data/tissues.txt".
std::filesystem::path default_tissue_db_path();

}  // namespace mqs
