#include "joints/config_io.hpp"

#include <fstream>
#include <sstream>

#include "joints/error.hpp"

namespace joints {

nlohmann::json vector_to_json(const RatVector& v) {
  auto arr = nlohmann::json::array();
  for (Index i = 0; i < v.size(); ++i) arr.push_back(v(i).str());
  return arr;
}

RatVector vector_from_json(const nlohmann::json& j, const std::string& where) {
  if (!j.is_array()) throw ParseError(where + ": expected an array");
  RatVector v(static_cast<Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) {
    const auto& e = j[i];
    const std::string field = where + "[" + std::to_string(i) + "]";
    std::string text;
    if (e.is_string()) {
      text = e.get<std::string>();
    } else if (e.is_number_integer()) {
      text = e.dump();
    } else {
      throw ParseError(field + ": expected a rational string");
    }
    try {
      v(static_cast<Index>(i)) = Rational::parse(text);
    } catch (const ParseError& err) {
      throw ParseError(field + ": " + err.what());
    }
  }
  return v;
}

nlohmann::json config_to_json(const Configuration& config) {
  nlohmann::json j;
  j["dim"] = config.dim();
  auto lines = nlohmann::json::array();
  for (const auto& l : config.lines()) {
    lines.push_back({{"base", vector_to_json(l.base())},
                     {"dir", vector_to_json(l.dir())}});
  }
  j["lines"] = std::move(lines);
  return j;
}

Configuration config_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ParseError("configuration: expected an object");
  if (!j.contains("dim") || !j["dim"].is_number_integer()) {
    throw ParseError("dim: missing or not an integer");
  }
  const int dim = j["dim"].get<int>();
  if (dim < 2) throw ParseError("dim: must be >= 2");
  if (!j.contains("lines") || !j["lines"].is_array()) {
    throw ParseError("lines: missing or not an array");
  }
  std::vector<Line> lines;
  const auto& arr = j["lines"];
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string where = "lines[" + std::to_string(i) + "]";
    const auto& e = arr[i];
    if (!e.is_object() || !e.contains("base") || !e.contains("dir")) {
      throw ParseError(where + ": expected {\"base\": [...], \"dir\": [...]}");
    }
    RatVector base = vector_from_json(e["base"], where + ".base");
    RatVector dir = vector_from_json(e["dir"], where + ".dir");
    if (base.size() != dim) {
      throw ParseError(where + ".base: length " + std::to_string(base.size()) +
                       " != dim " + std::to_string(dim));
    }
    if (dir.size() != dim) {
      throw ParseError(where + ".dir: length " + std::to_string(dir.size()) +
                       " != dim " + std::to_string(dim));
    }
    if (is_zero_vector(dir)) throw ParseError(where + ".dir: zero direction");
    lines.push_back(Line::through(base, dir));
  }
  return Configuration(dim, std::move(lines));
}

Configuration read_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
  try {
    return config_from_json(j);
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

void write_config(const Configuration& config, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write '" + path + "'");
  out << config_to_json(config).dump(2) << "\n";
}

}  // namespace joints
