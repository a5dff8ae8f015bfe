#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "tropcore/matrix.hpp"

namespace tropcore {

/// Matrix as written in a file; entries keep their original spelling so that
/// serialising a parsed document reproduces it.
struct MatrixDocument {
  Semiring semiring = kMaxPlus;
  std::size_t n = 0;
  std::vector<std::vector<std::string>> entries;
  std::optional<std::string> label;

  Matrix matrix() const;
  static MatrixDocument from_matrix(const Matrix& a, std::optional<std::string> label = std::nullopt);
};

/// Text form: optional '#' comments, a header "semiring n [label]", then n
/// rows of n entries. Throws ParseError with the offending line and column.
MatrixDocument parse_matrix_text(std::string_view text);
/// {"semiring": "...", "n": k, "entries": [[...], ...], "label": "..."}
MatrixDocument parse_matrix_json(std::string_view text);
/// JSON when the first non-blank character is '{', text otherwise.
MatrixDocument parse_matrix_document(std::string_view text);
MatrixDocument read_matrix_file(const std::string& path);

std::string serialize_text(const MatrixDocument& doc);
std::string serialize_json(const MatrixDocument& doc);

/// Comma or blank separated entries.
Vector parse_vector(std::string_view text, Semiring s);

nlohmann::json scalar_json(const Scalar& a, Semiring s);
nlohmann::json vector_json(const Vector& v);
/// 1-based node labels.
nlohmann::json nodes_json(const std::vector<std::size_t>& nodes);

}  // namespace tropcore
