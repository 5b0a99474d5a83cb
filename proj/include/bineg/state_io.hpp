#pragma once

// JSON state files. Two shapes are accepted:
//
//   {"family": "werner", "params": {"p": 0.7}}
//   {"matrix": [[[re, im], [re, im], [re, im], [re, im]], ... 4 rows ...]}
//
// Families and their parameters:
//   werner         p
//   bell_diagonal  c1, c2, c3
//   mem            C
//   gmem           x, y, a, b, gamma
//   ew             p, alpha (number or [re, im])

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "bineg/density_matrix.hpp"
#include "bineg/measures.hpp"

namespace bineg {

struct LoadedState {
  DensityMatrix4 state;
  std::string family;                   // "matrix" for explicit matrices
  std::optional<MeasureTriple> closed;  // family closed-form values, when the family has them
};

/// Throws ValidationError on malformed JSON, unknown families, bad parameters
/// or a matrix that is not a density matrix.
LoadedState parse_state(const nlohmann::json& doc);
LoadedState parse_state_text(std::string_view text);
LoadedState load_state_file(const std::filesystem::path& path);

/// {"matrix": [...]} document accepted by parse_state().
nlohmann::json matrix_to_json(const Mat4& m);

}  // namespace bineg
