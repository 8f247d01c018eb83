#pragma once

// Text formats: matrix documents, witness documents, reports.
//
// Matrix document:  {"n": 2, "data": [[[re, im], [re, im]], [[re, im], [re, im]]], "label": "..."}
// Witness document: {"t": .., "A": <matrix doc>, "B": <matrix doc>, "construction": "..", "scale": ..}
//   A and B decompose T / scale.

#include <filesystem>
#include <string>
#include <string_view>

#include <json.hpp>

#include "nurad/linalg.hpp"
#include "nurad/witness.hpp"

namespace nurad {

inline constexpr std::string_view kToolVersion = "0.1.0";

struct MatrixDocument {
  ComplexMatrix matrix;
  std::string label;
};

/// Throws ParseError on malformed JSON, shape mismatch or non-finite numbers.
MatrixDocument parse_matrix_document(std::string_view text);
MatrixDocument read_matrix_file(const std::filesystem::path& path);
nlohmann::json matrix_to_json(const ComplexMatrix& m, std::string_view label = {});
ComplexMatrix matrix_from_json(const nlohmann::json& j);

nlohmann::json vector_to_json(std::span<const Complex> v);

struct WitnessDocument {
  Witness witness;
  double scale = 1.0;
};

nlohmann::json witness_to_json(const Witness& w, double scale);
/// Accepts a bare witness document or any report carrying a "witness" member.
WitnessDocument witness_from_json(const nlohmann::json& j);
WitnessDocument read_witness_file(const std::filesystem::path& path);

/// Canonical report text: 2-space indent, keys sorted, trailing newline.
std::string serialize_report(const nlohmann::json& report);
nlohmann::json parse_report(std::string_view text);

std::string read_text_file(const std::filesystem::path& path);
/// Writes through a sibling temporary file and renames it into place.
void write_file_atomic(const std::filesystem::path& path, std::string_view content);

}  // namespace nurad
