#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "nurad/commands.hpp"
#include "nurad/errors.hpp"
#include "nurad/io.hpp"
#include "nurad/witness.hpp"

using namespace nurad;
namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct TempDir {
  fs::path root;
  TempDir() {
    std::random_device rd;
    root = fs::temp_directory_path() / ("nurad-cli-" + std::to_string(rd()));
    fs::create_directories(root);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(root, ec);
  }
  fs::path write(const std::string& name, const std::string& text) const {
    const fs::path p = root / name;
    std::ofstream(p, std::ios::binary) << text;
    return p;
  }
  fs::path matrix(const std::string& name, const ComplexMatrix& m) const {
    return write(name, matrix_to_json(m, name).dump());
  }
};

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const NuradError& e) {
    return e.kind();
  }
  FAIL("no NuradError thrown");
  return ErrorKind::InternalInconsistency;
}

const double r2 = 1.0 / std::sqrt(2.0);

}  // namespace

TEST_CASE("matrix documents: parse and reject") {
  const auto doc = parse_matrix_document(R"({"n":2,"data":[[[1,0],[0,2]],[[0,0],[-1,0]]],"label":"x"})");
  CHECK(doc.label == "x");
  CHECK(doc.matrix(0, 1) == Complex(0, 2));
  CHECK(doc.matrix(1, 1) == Complex(-1, 0));

  const char* bad[] = {
      "{",                                                   // not JSON
      "[]",                                                  // not an object
      R"({"data":[[[1,0]]]})",                               // no n
      R"({"n":2,"data":[[[1,0],[0,0]]]})",                   // row count
      R"({"n":1,"data":[[[1,0],[0,0]]]})",                   // row length
      R"({"n":1,"data":[[[1]]]})",                           // not a pair
      R"({"n":1,"data":[[["a",0]]]})",                       // not a number
      R"({"n":0,"data":[]})",                                // empty
      R"({"n":1,"data":[[[1,0]]],"label":3})",               // label type
      R"({"n":1.5,"data":[[[1,0]]]})",                       // fractional n
  };
  for (const char* text : bad) {
    CAPTURE(text);
    CHECK(kind_of([&] { parse_matrix_document(text); }) == ErrorKind::ParseError);
  }
  CHECK(kind_of([&] { read_matrix_file("/nonexistent/nurad.json"); }) == ErrorKind::ParseError);
}

TEST_CASE("matrix round trip keeps every bit") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-1e3, 1e3);
  ComplexMatrix m(3);
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 3; ++c) m(r, c) = {u(rng) / 7.0, u(rng) * 1e-9};
  m(0, 0) = {0.1, 1.0 / 3.0};
  const auto back = parse_matrix_document(matrix_to_json(m).dump()).matrix;
  CHECK(back == m);
}

TEST_CASE("report serialization is a fixed point") {
  TempDir tmp;
  const fs::path files[] = {
      tmp.matrix("lemma24.json", ComplexMatrix::diagonal({1.0, -1.0})),
      tmp.matrix("thm214.json", ComplexMatrix{{1.0, kI}, {kI, -1.0}}),
      tmp.matrix("shear.json", ComplexMatrix{{1.0, 2.0}, {0.0, 1.0}}),
  };
  const CliFlags flags;
  for (const auto& f : files) {
    for (const auto& r : {cmd_radius(f, flags), cmd_classify(f, flags), cmd_witness(f, flags)}) {
      const std::string again = serialize_report(parse_report(r.output));
      CHECK(again == r.output);
      CHECK(serialize_report(parse_report(again)) == again);
    }
  }
}

TEST_CASE("radius command") {
  TempDir tmp;
  const CliFlags flags;
  const auto r = cmd_radius(tmp.matrix("a.json", ComplexMatrix{{0.0, 2.0 * kI}, {0.0, 0.0}}), flags);
  CHECK(r.exit_code == 0);
  const json j = parse_report(r.output);
  CHECK(j["command"] == "radius");
  CHECK(j["label"] == "a.json");
  CHECK(j["radius"]["value"].get<double>() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(j["radius"]["method"] == "sweep");
  CHECK(j["sample"]["seed"] == 42);
  CHECK(j["gap"].get<double>() >= -1e-12);
  CHECK(j["gap"].get<double>() <= 5e-3);
  CHECK(j["normaloid"] == false);

  const auto d = parse_report(cmd_radius(tmp.matrix("d.json", ComplexMatrix::diagonal({0.3, Complex(0, -0.8), 0.5})), flags).output);
  CHECK(d["radius"]["value"].get<double>() == doctest::Approx(0.8).epsilon(1e-12));
  CHECK(d["normaloid"] == true);

  CHECK(kind_of([&] { cmd_radius(tmp.write("bad.json", "{\"n\":2}"), flags); }) == ErrorKind::ParseError);
}

TEST_CASE("classify exit codes and embedded witness") {
  TempDir tmp;
  const CliFlags flags;
  const auto ext = cmd_classify(tmp.matrix("e.json", ComplexMatrix{{1.0, kI}, {kI, -1.0}}), flags);
  CHECK(ext.exit_code == kExitExtreme);
  CHECK(parse_report(ext.output)["witness"].is_null());

  const auto ne = cmd_classify(tmp.matrix("n.json", ComplexMatrix::diagonal({1.0, -1.0})), flags);
  CHECK(ne.exit_code == kExitNotExtreme);
  const json j = parse_report(ne.output);
  CHECK(j["verdict"]["kind"] == "NotExtreme");
  CHECK(j["verification"]["passed"] == true);
  CHECK(j["verification"]["failed_checks"].empty());
  const auto wd = witness_from_json(j);
  CHECK(frobenius_norm(0.5 * (wd.witness.A + wd.witness.B) - ComplexMatrix::diagonal({1.0, -1.0})) <= 1e-12);

  const auto gap = cmd_classify(tmp.matrix("g.json", ComplexMatrix{{1.0, r2}, {-r2, 0.0}}), flags);
  CHECK(gap.exit_code == kExitUnknown);
  CHECK(parse_report(gap.output)["verdict"]["theorem"] == "Thm2.18-gap");

  CHECK(kind_of([&] { cmd_classify(tmp.matrix("z.json", ComplexMatrix::zeros(2)), flags); }) ==
        ErrorKind::ZeroOperator);
}

TEST_CASE("classify reports the scale of a non-normalized operator") {
  TempDir tmp;
  const CliFlags flags;
  const auto r = cmd_classify(tmp.matrix("s.json", ComplexMatrix::diagonal({3.0, -3.0})), flags);
  CHECK(r.exit_code == kExitNotExtreme);
  const json j = parse_report(r.output);
  CHECK(j["verdict"]["scale"].get<double>() == doctest::Approx(3.0).epsilon(1e-12));
  CHECK(j["verification"]["passed"] == true);
}

TEST_CASE("witness command: shear example") {
  TempDir tmp;
  const CliFlags flags;
  const auto r = cmd_witness(tmp.matrix("shear.json", ComplexMatrix{{1.0, 2.0}, {0.0, 1.0}}), flags);
  CHECK(r.exit_code == kExitNotExtreme);
  const json j = parse_report(r.output);
  CHECK(j["theorem"] == "Lemma2.15");
  CHECK(j["witness"]["construction"] == "shear");
  const auto wd = witness_from_json(j);
  CHECK(wd.witness.t == doctest::Approx(0.5));
  CHECK(wd.scale == doctest::Approx(2.0).epsilon(1e-12));
  // A, B decompose T / w(T); rescaled, A is 2I.
  CHECK(frobenius_norm(wd.scale * wd.witness.A - 2.0 * ComplexMatrix::identity(2)) <= 1e-9);
}

TEST_CASE("verify: shipped witness passes, tampered one names its residual") {
  TempDir tmp;
  const CliFlags flags;
  const auto t = tmp.matrix("t.json", ComplexMatrix::diagonal({1.0, -1.0}));
  const Witness good = selfadjoint_split(1.0, -1.0);
  const auto wpath = tmp.write("w.json", witness_to_json(good, 1.0).dump());
  const auto ok = cmd_verify(t, wpath, flags);
  CHECK(ok.exit_code == 0);
  CHECK(parse_report(ok.output)["verification"]["passed"] == true);

  Witness bad = good;
  bad.A(0, 0) += 1e-3;
  const auto bpath = tmp.write("b.json", witness_to_json(bad, 1.0).dump());
  const auto no = cmd_verify(t, bpath, flags);
  CHECK(no.exit_code == 1);
  const json j = parse_report(no.output);
  CHECK(j["verification"]["passed"] == false);
  const auto& failed = j["verification"]["failed_checks"];
  CHECK(std::find(failed.begin(), failed.end(), "midpoint_residual") != failed.end());
  CHECK(j["verification"]["midpoint_residual"].get<double>() > 1e-4);

  // A witness whose parts are too large.
  Witness big = good;
  big.A = 1.01 * big.A;
  big.B = 2.0 * ComplexMatrix::diagonal({1.0, -1.0}) - big.A;
  const auto gpath = tmp.write("g.json", witness_to_json(big, 1.0).dump());
  const json jg = parse_report(cmd_verify(t, gpath, flags).output);
  CHECK(jg["verification"]["passed"] == false);
  CHECK(!jg["verification"]["failed_checks"].empty());

  // A classify report doubles as a witness document.
  const auto rep = tmp.write("rep.json", cmd_classify(t, flags).output);
  CHECK(cmd_verify(t, rep, flags).exit_code == 0);

  const auto three = tmp.matrix("three.json", ComplexMatrix::identity(3));
  CHECK(kind_of([&] { cmd_verify(three, wpath, flags); }) == ErrorKind::DimensionMismatch);
  const auto ext = tmp.write("ext.json", cmd_classify(tmp.matrix("e.json", ComplexMatrix::identity(2)), flags).output);
  CHECK(kind_of([&] { cmd_verify(t, ext, flags); }) == ErrorKind::ParseError);
}

TEST_CASE("range: csv") {
  TempDir tmp;
  CliFlags flags;
  flags.points = 90;
  const auto csv = cmd_range(tmp.matrix("c.json", ComplexMatrix{{1.0, 1.0}, {0.0, -1.0}}), flags).output;
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  CHECK(line == "theta,re,im");
  int rows = 0;
  double top = 0.0;
  while (std::getline(in, line)) {
    double th, re, im;
    REQUIRE(std::sscanf(line.c_str(), "%lf,%lf,%lf", &th, &re, &im) == 3);
    top = std::max(top, std::hypot(re, im));
    ++rows;
  }
  CHECK(rows == 90);
  CHECK(std::abs(top - std::sqrt(5.0) / 2.0) <= 1e-6);

  const auto h = cmd_range(tmp.matrix("h.json", ComplexMatrix{{2.0, Complex(1, 1)}, {Complex(1, -1), -0.5}}), flags);
  std::istringstream hin(h.output);
  std::getline(hin, line);
  while (std::getline(hin, line)) {
    double th, re, im;
    REQUIRE(std::sscanf(line.c_str(), "%lf,%lf,%lf", &th, &re, &im) == 3);
    CHECK(std::abs(im) <= 1e-10);
  }

  const auto s = cmd_range(tmp.matrix("s.json", Complex(0.3, 0.4) * ComplexMatrix::identity(2)), flags).output;
  std::istringstream sin(s);
  std::getline(sin, line);
  while (std::getline(sin, line)) {
    double th, re, im;
    REQUIRE(std::sscanf(line.c_str(), "%lf,%lf,%lf", &th, &re, &im) == 3);
    CHECK(std::abs(re - 0.3) <= 1e-12);
    CHECK(std::abs(im - 0.4) <= 1e-12);
  }
}

TEST_CASE("range: svg and format errors") {
  TempDir tmp;
  CliFlags flags;
  flags.format = "svg";
  const auto m = tmp.matrix("m.json", ComplexMatrix{{1.0, 1.0}, {0.0, -1.0}});
  const auto a = cmd_range(m, flags).output;
  CHECK(a.rfind("<svg", 0) == 0);
  CHECK(a.find("width=\"800\" height=\"800\"") != std::string::npos);
  CHECK(a.find("<polyline") != std::string::npos);
  CHECK(a.find("<circle") != std::string::npos);
  CHECK(cmd_range(m, flags).output == a);

  flags.format = "png";
  CHECK(kind_of([&] { cmd_range(m, flags); }) == ErrorKind::BadFormat);
}

TEST_CASE("atomic writes") {
  TempDir tmp;
  const auto p = tmp.root / "out.txt";
  write_file_atomic(p, "first\n");
  write_file_atomic(p, "second\n");
  CHECK(read_text_file(p) == "second\n");
  CHECK(!fs::exists(tmp.root / "out.txt.tmp"));
  CHECK_THROWS_AS(write_file_atomic(tmp.root / "missing" / "x.txt", "y"), NuradError);
}

TEST_CASE("commands are deterministic") {
  TempDir tmp;
  const CliFlags flags;
  const auto m = tmp.matrix("m.json", ComplexMatrix{{0.2, Complex(0.7, -0.1)}, {Complex(0.3, 0.3), -0.6}});
  CHECK(cmd_radius(m, flags).output == cmd_radius(m, flags).output);
  CHECK(cmd_classify(m, flags).output == cmd_classify(m, flags).output);
  CHECK(cmd_range(m, flags).output == cmd_range(m, flags).output);
}

TEST_CASE("selftest passes for several seeds") {
  for (std::uint64_t seed : {42ULL, 7ULL, 2024ULL}) {
    CliFlags flags;
    flags.seed = seed;
    const auto r = cmd_selftest(flags);
    INFO(r.output);
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("FAIL") == std::string::npos);
  }
}
