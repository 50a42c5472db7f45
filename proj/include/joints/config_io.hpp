#pragma once

#include <nlohmann/json.hpp>
#include <string>

#include "joints/geometry.hpp"

namespace joints {

/// {"dim": d, "lines": [{"base": [...], "dir": [...]}, ...]} with rationals
/// as strings. Lines are emitted canonical and sorted by (dir, base).
nlohmann::json config_to_json(const Configuration& config);
/// Canonicalizes and deduplicates. Throws ParseError naming the bad field.
Configuration config_from_json(const nlohmann::json& j);

Configuration read_config(const std::string& path);
void write_config(const Configuration& config, const std::string& path);

nlohmann::json vector_to_json(const RatVector& v);
/// `where` prefixes error messages, e.g. "lines[2].dir".
RatVector vector_from_json(const nlohmann::json& j, const std::string& where);

}  // namespace joints
