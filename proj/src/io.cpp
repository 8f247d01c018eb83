#include "nurad/io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <system_error>

#include "nurad/errors.hpp"

namespace nurad {

namespace {

using nlohmann::json;

[[noreturn]] void parse_fail(const std::string& what) { throw NuradError(ErrorKind::ParseError, what); }

double finite_number(const json& v, const char* where) {
  if (!v.is_number()) parse_fail(std::string(where) + ": expected a number");
  const double d = v.get<double>();
  if (!std::isfinite(d)) parse_fail(std::string(where) + ": non-finite number");
  return d;
}

Complex complex_from_json(const json& v) {
  if (!v.is_array() || v.size() != 2) parse_fail("matrix entry must be a [re, im] pair");
  return {finite_number(v[0], "re"), finite_number(v[1], "im")};
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    parse_fail(std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace

ComplexMatrix matrix_from_json(const json& j) {
  if (!j.is_object()) parse_fail("matrix document must be an object");
  if (!j.contains("n") || !j["n"].is_number_integer()) parse_fail("missing integer field 'n'");
  const auto n = j["n"].get<std::int64_t>();
  if (n < 1 || n > 4096) parse_fail("'n' out of range");
  if (!j.contains("data") || !j["data"].is_array()) parse_fail("missing array field 'data'");
  const json& data = j["data"];
  const auto un = static_cast<std::size_t>(n);
  if (data.size() != un) parse_fail("'data' must have n rows");
  ComplexMatrix m(un);
  for (std::size_t r = 0; r < un; ++r) {
    if (!data[r].is_array() || data[r].size() != un) parse_fail("row " + std::to_string(r) + " must have n entries");
    for (std::size_t c = 0; c < un; ++c) m(r, c) = complex_from_json(data[r][c]);
  }
  return m;
}

MatrixDocument parse_matrix_document(std::string_view text) {
  const json j = parse_json(text);
  MatrixDocument doc{matrix_from_json(j), {}};
  if (j.contains("label")) {
    if (!j["label"].is_string()) parse_fail("'label' must be a string");
    doc.label = j["label"].get<std::string>();
  }
  return doc;
}

MatrixDocument read_matrix_file(const std::filesystem::path& path) {
  return parse_matrix_document(read_text_file(path));
}

json vector_to_json(std::span<const Complex> v) {
  json out = json::array();
  for (const auto& z : v) out.push_back(json::array({z.real(), z.imag()}));
  return out;
}

json matrix_to_json(const ComplexMatrix& m, std::string_view label) {
  json data = json::array();
  for (std::size_t r = 0; r < m.size(); ++r) data.push_back(vector_to_json(m.row(r)));
  json j{{"n", m.size()}, {"data", std::move(data)}};
  if (!label.empty()) j["label"] = std::string(label);
  return j;
}

json witness_to_json(const Witness& w, double scale) {
  return {{"t", w.t},
          {"A", matrix_to_json(w.A)},
          {"B", matrix_to_json(w.B)},
          {"construction", std::string(to_string(w.construction))},
          {"scale", scale}};
}

WitnessDocument witness_from_json(const json& j) {
  if (!j.is_object()) parse_fail("witness document must be an object");
  if (j.contains("witness")) {
    if (j["witness"].is_null()) parse_fail("report carries no witness");
    return witness_from_json(j["witness"]);
  }
  for (const char* key : {"t", "A", "B"})
    if (!j.contains(key)) parse_fail(std::string("witness document lacks '") + key + "'");
  WitnessDocument doc;
  doc.witness.t = finite_number(j["t"], "t");
  doc.witness.A = matrix_from_json(j["A"]);
  doc.witness.B = matrix_from_json(j["B"]);
  if (j.contains("construction")) {
    if (!j["construction"].is_string()) parse_fail("'construction' must be a string");
    try {
      doc.witness.construction = construction_from_string(j["construction"].get<std::string>());
    } catch (const NuradError& e) {
      parse_fail(e.what());
    }
  }
  if (j.contains("scale")) {
    doc.scale = finite_number(j["scale"], "scale");
    if (!(doc.scale > 0.0)) parse_fail("'scale' must be positive");
  }
  return doc;
}

WitnessDocument read_witness_file(const std::filesystem::path& path) {
  return witness_from_json(parse_json(read_text_file(path)));
}

std::string serialize_report(const json& report) { return report.dump(2) + "\n"; }

json parse_report(std::string_view text) { return parse_json(text); }

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) parse_fail("cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file_atomic(const std::filesystem::path& path, std::string_view content) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw NuradError(ErrorKind::InvalidArgument, "cannot write '" + tmp.string() + "'");
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw NuradError(ErrorKind::InvalidArgument, "write failed for '" + tmp.string() + "'");
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw NuradError(ErrorKind::InvalidArgument, "cannot move output into '" + path.string() + "'");
  }
}

}  // namespace nurad
