#pragma once

#include "edet/matrix.hpp"

namespace edet {

/// Matrix files:
///   { "ring": "<ring-name>", "n": <order>, "entries": [[<entry>, ...], ...] }
/// Entry encodings are ring-specific: rational strings, coefficient
/// arrays for the division/table algebras, nested arrays for matrix
/// rings, variable names for the symbolic rings. Values written by
/// matrix_to_json re-parse to an identical matrix.
Matrix matrix_from_json(const nlohmann::json& j);
Matrix matrix_from_json(const nlohmann::json& j, const RingPtr& ring);
nlohmann::json matrix_to_json(const Matrix& a);

Matrix load_matrix_file(const std::string& path);
void save_matrix_file(const Matrix& a, const std::string& path);

} // namespace edet
