#include "bineg/state_io.hpp"

#include <fstream>
#include <sstream>

#include "bineg/states.hpp"

namespace bineg {

namespace {

using nlohmann::json;

double number(const json& params, const char* key) {
  if (!params.contains(key)) throw ValidationError(std::string("state file: missing parameter '") + key + "'");
  const json& v = params.at(key);
  if (!v.is_number()) throw ValidationError(std::string("state file: parameter '") + key + "' must be a number");
  return v.get<double>();
}

Complex complex_value(const json& v, const std::string& what) {
  if (v.is_number()) return v.get<double>();
  if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number()) {
    return {v[0].get<double>(), v[1].get<double>()};
  }
  throw ValidationError("state file: " + what + " must be a number or a [re, im] pair");
}

Mat4 parse_matrix(const json& rows) {
  if (!rows.is_array() || rows.size() != 4) throw ValidationError("state file: 'matrix' must have 4 rows");
  Mat4 m;
  for (std::size_t i = 0; i < 4; ++i) {
    const json& row = rows[i];
    if (!row.is_array() || row.size() != 4) {
      throw ValidationError("state file: matrix row " + std::to_string(i) + " must have 4 entries");
    }
    for (std::size_t j = 0; j < 4; ++j) {
      m(i, j) = complex_value(row[j], "matrix entry (" + std::to_string(i) + ", " + std::to_string(j) + ")");
    }
  }
  return m;
}

}  // namespace

LoadedState parse_state(const json& doc) {
  if (!doc.is_object()) throw ValidationError("state file: top level must be a JSON object");
  if (doc.contains("matrix")) {
    return LoadedState{DensityMatrix4::from_matrix(parse_matrix(doc.at("matrix"))), "matrix", std::nullopt};
  }
  if (!doc.contains("family")) throw ValidationError("state file: expected a 'family' or a 'matrix' key");
  if (!doc.at("family").is_string()) throw ValidationError("state file: 'family' must be a string");
  const std::string family = doc.at("family").get<std::string>();
  const json params = doc.value("params", json::object());
  if (!params.is_object()) throw ValidationError("state file: 'params' must be an object");

  if (family == "werner") {
    const double p = number(params, "p");
    return {werner(p), family, werner_measures(p)};
  }
  if (family == "bell_diagonal") {
    const BellDiagonalParams c{number(params, "c1"), number(params, "c2"), number(params, "c3")};
    return {bell_diagonal(c), family, bell_diagonal_measures(c)};
  }
  if (family == "mem") {
    const double c = number(params, "C");
    return {mem(c), family, mem_measures(c)};
  }
  if (family == "gmem") {
    const GMemParams g{number(params, "x"), number(params, "y"), number(params, "a"), number(params, "b"),
                       number(params, "gamma")};
    return {gmem(g), family, gmem_measures(g)};
  }
  if (family == "ew") {
    if (!params.contains("alpha")) throw ValidationError("state file: missing parameter 'alpha'");
    const EwParams e{number(params, "p"), complex_value(params.at("alpha"), "alpha")};
    return {ew(e), family, ew_measures(e)};
  }
  throw ValidationError("state file: unknown family '" + family + "'");
}

LoadedState parse_state_text(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("state file: invalid JSON: ") + e.what());
  }
  return parse_state(doc);
}

LoadedState load_state_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open state file '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_state_text(buf.str());
}

json matrix_to_json(const Mat4& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < 4; ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < 4; ++j) row.push_back({m(i, j).real(), m(i, j).imag()});
    rows.push_back(row);
  }
  return json{{"matrix", rows}};
}

}  // namespace bineg
