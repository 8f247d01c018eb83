#include "nurad/commands.hpp"

#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <vector>

#include "nurad/classifier.hpp"
#include "nurad/closed_forms.hpp"
#include "nurad/errors.hpp"
#include "nurad/io.hpp"
#include "nurad/radius.hpp"
#include "nurad/random.hpp"

namespace nurad {

namespace {

using nlohmann::json;

json base_report(std::string_view command, const MatrixDocument& doc, const CliFlags& flags) {
  return {{"command", std::string(command)},
          {"label", doc.label},
          {"n", doc.matrix.size()},
          {"tool_version", std::string(kToolVersion)},
          {"tolerances", {{"verdict", flags.tol}, {"boundary_band", kBoundaryBand}}}};
}

json verification_json(const VerificationReport& r) {
  json failed = json::array();
  const double slack = -kWitnessSlackTol;
  if (r.midpoint_residual > kWitnessMidpointTol) failed.push_back("midpoint_residual");
  if (r.radius_slack_A < slack) failed.push_back("radius_slack_A");
  if (r.radius_slack_B < slack) failed.push_back("radius_slack_B");
  if (r.distinctness < kWitnessDistinctTol) failed.push_back("distinctness");
  if (r.lemma_gen_residual > kWitnessLemmaTol) failed.push_back("lemma_gen_residual");
  if (!r.passed && failed.empty()) failed.push_back("t");
  return {{"midpoint_residual", r.midpoint_residual},
          {"radius_slack_A", r.radius_slack_A},
          {"radius_slack_B", r.radius_slack_B},
          {"distinctness", r.distinctness},
          {"lemma_gen_residual", r.lemma_gen_residual},
          {"passed", r.passed},
          {"failed_checks", std::move(failed)}};
}

int exit_for(VerdictKind k) {
  switch (k) {
    case VerdictKind::Extreme: return kExitExtreme;
    case VerdictKind::NotExtreme: return kExitNotExtreme;
    case VerdictKind::Unknown: return kExitUnknown;
  }
  return kExitUnknown;
}

// Verdict plus, when present, the witness and its re-verification.
json verdict_block(const ComplexMatrix& t, const Verdict& v, double tol, json& witness, json& verification) {
  witness = nullptr;
  verification = nullptr;
  if (v.witness) {
    witness = witness_to_json(*v.witness, v.scale);
    verification = verification_json(verify_witness((1.0 / v.scale) * t, *v.witness, tol));
  }
  return {{"kind", std::string(to_string(v.kind))}, {"theorem", v.theorem}, {"notes", v.notes}, {"scale", v.scale}};
}

std::string fmt(const char* spec, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, spec, v);
  return buf;
}

std::string range_csv(const std::vector<Complex>& pts) {
  std::string out = "theta,re,im\n";
  const double n = static_cast<double>(pts.size());
  for (std::size_t j = 0; j < pts.size(); ++j) {
    const double th = 2.0 * std::numbers::pi * static_cast<double>(j) / n;
    out += fmt("%.17g", th) + "," + fmt("%.17g", pts[j].real()) + "," + fmt("%.17g", pts[j].imag()) + "\n";
  }
  return out;
}

std::string range_svg(const std::vector<Complex>& pts, std::string_view label) {
  double extent = 1.0;
  for (const auto& z : pts) extent = std::max(extent, std::abs(z));
  const double px = 360.0 / extent;  // pixels per unit
  const auto X = [&](double x) { return fmt("%.3f", 400.0 + px * x); };
  const auto Y = [&](double y) { return fmt("%.3f", 400.0 - px * y); };
  std::string poly;
  for (const auto& z : pts) {
    if (!poly.empty()) poly += ' ';
    poly += X(z.real()) + "," + Y(z.imag());
  }
  if (!pts.empty()) poly += ' ' + X(pts[0].real()) + "," + Y(pts[0].imag());
  std::string title;
  for (char c : label) {
    if (c == '<') title += "&lt;";
    else if (c == '>') title += "&gt;";
    else if (c == '&') title += "&amp;";
    else title += c;
  }
  std::string s;
  s += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"800\" viewBox=\"0 0 800 800\">\n";
  s += "<title>numerical range" + (title.empty() ? std::string() : ": " + title) + "</title>\n";
  s += "<rect width=\"800\" height=\"800\" fill=\"#ffffff\"/>\n";
  s += "<line x1=\"0\" y1=\"400\" x2=\"800\" y2=\"400\" stroke=\"#cccccc\" stroke-width=\"1\"/>\n";
  s += "<line x1=\"400\" y1=\"0\" x2=\"400\" y2=\"800\" stroke=\"#cccccc\" stroke-width=\"1\"/>\n";
  s += "<circle cx=\"400\" cy=\"400\" r=\"" + fmt("%.3f", px) +
       "\" fill=\"none\" stroke=\"#888888\" stroke-width=\"1\" stroke-dasharray=\"6 4\"/>\n";
  s += "<polyline points=\"" + poly + "\" fill=\"#3b7dd8\" fill-opacity=\"0.25\" stroke=\"#1d4f91\" stroke-width=\"2\"/>\n";
  s += "</svg>\n";
  return s;
}

}  // namespace

CommandResult cmd_radius(const std::filesystem::path& path, const CliFlags& flags) {
  const MatrixDocument doc = read_matrix_file(path);
  const ComplexMatrix& t = doc.matrix;
  const RadiusReport rep = radius_sweep(t);
  const double sampled = radius_sample(t, flags.samples, flags.seed);
  json maxs = json::array();
  for (const auto& x : rep.maximizers) maxs.push_back(vector_to_json(x));
  json report = base_report("radius", doc, flags);
  report["radius"] = {{"value", rep.value},
                      {"method", std::string(to_string(rep.method))},
                      {"theta_stars", rep.theta_stars},
                      {"maximizers", std::move(maxs)},
                      {"plateau", rep.plateau}};
  report["sample"] = {{"value", sampled},
                      {"method", std::string(to_string(RadiusMethod::Sample))},
                      {"samples", flags.samples},
                      {"seed", flags.seed}};
  report["gap"] = rep.value - sampled;
  report["normaloid"] = is_normaloid(t, flags.tol);
  report["operator_norm"] = operator_norm(t);
  return {0, serialize_report(report)};
}

CommandResult cmd_classify(const std::filesystem::path& path, const CliFlags& flags) {
  const MatrixDocument doc = read_matrix_file(path);
  const Verdict v = classify(doc.matrix, flags.tol);
  json report = base_report("classify", doc, flags);
  json witness, verification;
  report["verdict"] = verdict_block(doc.matrix, v, flags.tol, witness, verification);
  report["radius"] = v.scale;
  report["witness"] = std::move(witness);
  report["verification"] = std::move(verification);
  return {exit_for(v.kind), serialize_report(report)};
}

CommandResult cmd_witness(const std::filesystem::path& path, const CliFlags& flags) {
  const MatrixDocument doc = read_matrix_file(path);
  const Verdict v = classify(doc.matrix, flags.tol);
  json report = base_report("witness", doc, flags);
  json witness, verification;
  verdict_block(doc.matrix, v, flags.tol, witness, verification);
  report["witness"] = std::move(witness);
  report["verification"] = std::move(verification);
  report["theorem"] = v.theorem;
  return {exit_for(v.kind), serialize_report(report)};
}

CommandResult cmd_verify(const std::filesystem::path& matrix_path, const std::filesystem::path& witness_path,
                         const CliFlags& flags) {
  const MatrixDocument doc = read_matrix_file(matrix_path);
  const WitnessDocument wd = read_witness_file(witness_path);
  const ComplexMatrix s = (1.0 / wd.scale) * doc.matrix;
  const VerificationReport r = verify_witness(s, wd.witness, flags.tol);
  json report = base_report("verify", doc, flags);
  report["construction"] = std::string(to_string(wd.witness.construction));
  report["scale"] = wd.scale;
  report["verification"] = verification_json(r);
  return {r.passed ? 0 : 1, serialize_report(report)};
}

CommandResult cmd_range(const std::filesystem::path& path, const CliFlags& flags) {
  if (flags.format != "csv" && flags.format != "svg") {
    throw NuradError(ErrorKind::BadFormat, "unknown format '" + flags.format + "' (expected csv or svg)");
  }
  const MatrixDocument doc = read_matrix_file(path);
  const auto pts = range_boundary(doc.matrix, flags.points);
  return {0, flags.format == "csv" ? range_csv(pts) : range_svg(pts, doc.label)};
}

CommandResult cmd_selftest(const CliFlags& flags) {
  struct Check {
    std::string tag;
    std::string what;
    std::function<bool()> run;
  };
  const double tol = flags.tol;
  const auto w_is = [](const ComplexMatrix& t, double v) { return std::abs(numerical_radius(t) - v) <= 1e-9; };
  const auto verdict = [tol](const ComplexMatrix& t, VerdictKind k, std::string_view tag) {
    const Verdict v = classify(t, tol);
    if (v.kind != k || (!tag.empty() && v.theorem != tag)) return false;
    return !v.witness || verify_witness((1.0 / v.scale) * t, *v.witness, tol).passed;
  };
  const auto family = [](double a, Complex al) { return ComplexMatrix{{1.0, al}, {-std::conj(al), a}}; };
  const double r2 = 1.0 / std::sqrt(2.0);

  std::vector<Check> checks{
      {"Lemma2.4", "w([[0,2i],[0,0]]) = 1", [&] { return w_is(ComplexMatrix{{0.0, 2.0 * kI}, {0.0, 0.0}}, 1.0); }},
      {"Lemma2.4", "diag(1,-1) not extreme, A = [[1,i],[i,-1]], B = A*",
       [&] {
         const auto d = ComplexMatrix::diagonal({1.0, -1.0});
         const Verdict v = classify(d, tol);
         return v.kind == VerdictKind::NotExtreme && v.witness &&
                frobenius_norm(v.witness->A - ComplexMatrix{{1.0, kI}, {kI, -1.0}}) <= 1e-12 &&
                frobenius_norm(v.witness->B - adjoint(v.witness->A)) <= 1e-12 &&
                verify_witness(d, *v.witness, tol).passed;
       }},
      {"Thm2.14", "[[1,i],[i,-1]]: w = 1, extreme",
       [&] {
         const ComplexMatrix t{{1.0, kI}, {kI, -1.0}};
         return w_is(t, 1.0) && verdict(t, VerdictKind::Extreme, "Thm2.14");
       }},
      {"Thm2.14", "[[1,1/2],[-1/2,-1]]: w = 1, not extreme",
       [&] {
         const ComplexMatrix t{{1.0, 0.5}, {-0.5, -1.0}};
         return w_is(t, 1.0) && verdict(t, VerdictKind::NotExtreme, "Thm2.14");
       }},
      {"Thm2.9", "diag(I2,-I2) not extreme",
       [&] { return verdict(ComplexMatrix::diagonal({1.0, 1.0, -1.0, -1.0}), VerdictKind::NotExtreme, ""); }},
      {"Thm2.9", "diag(1, i, e^{i pi/4}) extreme",
       [&] {
         return verdict(ComplexMatrix::diagonal({1.0, kI, std::polar(1.0, std::numbers::pi / 4)}),
                        VerdictKind::Extreme, "Thm2.9");
       }},
      {"Lemma2.15", "[[1,2],[0,1]]: w = 2, t = 1/2, A = 2I",
       [&] {
         const ComplexMatrix t{{1.0, 2.0}, {0.0, 1.0}};
         const Witness w = shear_split(1.0, 2.0);
         return w_is(t, 2.0) && std::abs(w.t - 0.5) <= 1e-15 &&
                frobenius_norm(w.A - 2.0 * ComplexMatrix::identity(2)) <= 1e-12 &&
                verdict(t, VerdictKind::NotExtreme, "Lemma2.15");
       }},
      {"Thm2.5", "-I extreme, diag(1,-1,0.3) not extreme",
       [&] {
         return verdict(-1.0 * ComplexMatrix::identity(3), VerdictKind::Extreme, "Thm2.5") &&
                verdict(ComplexMatrix::diagonal({1.0, -1.0, 0.3}), VerdictKind::NotExtreme, "");
       }},
      {"Cor2.2", "diag(1, 1/2) not extreme",
       [&] { return verdict(ComplexMatrix::diagonal({1.0, 0.5}), VerdictKind::NotExtreme, "Cor2.2"); }},
      {"Thm2.5", "I3 extreme", [&] { return verdict(ComplexMatrix::identity(3), VerdictKind::Extreme, "Thm2.5"); }},
      {"Thm2.13", "[[iI, diag(1,1/2)],[0, 0]] not extreme",
       [&] {
         const ComplexMatrix t{{kI, 0, 1, 0}, {0, kI, 0, 0.5}, {0, 0, 0, 0}, {0, 0, 0, 0}};
         return verdict(t, VerdictKind::NotExtreme, "Thm2.13");
       }},
      {"Thm2.18", "case II (a = 0, alpha = 0.3) and case III (a = 0, alpha = 0.6) not extreme",
       [&] {
         return verdict(family(0.0, 0.3), VerdictKind::NotExtreme, "Thm2.18") &&
                verdict(family(0.0, 0.6), VerdictKind::NotExtreme, "Thm2.18");
       }},
      {"Thm2.18-gap", "a = 0, |alpha| = 1/sqrt(2) abstains",
       [&] { return verdict(family(0.0, r2), VerdictKind::Unknown, "Thm2.18-gap"); }},
      {"Lemma2.17", "regions (i), (ii) and the closed edge give w = 1",
       [&] {
         for (double m : {0.6, 0.4, r2}) {
           const auto f = WtFamily::make(0.0, m);
           const auto w = radius_wt_family(f);
           if (!w || std::abs(*w - 1.0) > 0.0 || std::abs(numerical_radius(f.matrix()) - 1.0) > 1e-8) return false;
         }
         return true;
       }},
      {"collinear", "(sqrt3/2, -sqrt3/2, 1) -> 1",
       [&] { return std::abs(radius_collinear(std::sqrt(3.0) / 2, -std::sqrt(3.0) / 2, 1.0) - 1.0) <= 1e-12; }},
      {"oracle", "block / Johnson closed forms vs sweep on seeded inputs",
       [&] {
         Rng rng(flags.seed);
         for (int k = 0; k < 40; ++k) {
           const Complex l1 = random_gaussian_complex(rng), l2 = random_gaussian_complex(rng);
           const Complex z = random_gaussian_complex(rng);
           const double sw = numerical_radius(ComplexMatrix{{l1, z}, {0.0, l2}});
           if (std::abs(radius_block(l1, l2, std::abs(z)).first - sw) > 1e-7) return false;
           const Complex m2 = std::abs(l1) * random_phase(rng);
           const double sj = numerical_radius(ComplexMatrix{{l1, z}, {0.0, m2}});
           if (std::abs(radius_johnson(l1, m2, z) - sj) > 1e-7) return false;
         }
         return true;
       }},
      {"oracle", "sampling lower bound within 5e-3 of the sweep (n = 2)",
       [&] {
         Rng rng(flags.seed + 1);
         for (int k = 0; k < 5; ++k) {
           auto t = random_gaussian_matrix(2, rng);
           t *= 1.0 / numerical_radius(t);
           const double s = radius_sample(t, flags.samples, flags.seed + static_cast<std::uint64_t>(k));
           if (s > 1.0 + 1e-12 || s < 1.0 - 5e-3) return false;
         }
         return true;
       }},
      {"Thm2.1", "seeded non-unitary normaloids are not extreme",
       [&] {
         Rng rng(flags.seed + 2);
         for (int k = 0; k < 10; ++k) {
           const std::size_t n = 2 + static_cast<std::size_t>(k % 3);
           auto c = random_gaussian_matrix(n - 1, rng);
           c *= random_uniform(rng, 0.1, 0.9) / operator_norm(c);
           const auto u = random_unitary(n, rng);
           const auto t = u * block_diag(ComplexMatrix{{random_phase(rng)}}, c) * adjoint(u);
           if (!verdict(t, VerdictKind::NotExtreme, "")) return false;
         }
         return true;
       }},
      {"Thm2.8", "seeded 2x2 unitaries agree with the eigenvalue pair criterion",
       [&] {
         Rng rng(flags.seed + 3);
         for (int k = 0; k < 20; ++k) {
           const auto u = random_unitary(2, rng);
           const auto ne = normal_eigen(u);
           const bool expect = pair_extreme(ne.values[0], ne.values[1], tol);
           if ((classify(u, tol).kind == VerdictKind::Extreme) != expect) return false;
         }
         return true;
       }},
      {"determinism", "classify is reproducible",
       [&] {
         Rng rng(flags.seed + 4);
         const auto t = random_gaussian_matrix(2, rng);
         const Verdict a = classify(t, tol), b = classify(t, tol);
         return a.kind == b.kind && a.theorem == b.theorem && a.notes == b.notes;
       }},
  };

  std::string out;
  int passed = 0;
  for (const auto& c : checks) {
    bool ok = false;
    try {
      ok = c.run();
    } catch (const std::exception&) {
      ok = false;
    }
    passed += ok ? 1 : 0;
    char line[256];
    std::snprintf(line, sizeof line, "%-4s  %-12s  %s\n", ok ? "PASS" : "FAIL", c.tag.c_str(), c.what.c_str());
    out += line;
  }
  out += "selftest: " + std::to_string(passed) + "/" + std::to_string(checks.size()) + " passed\n";
  return {passed == static_cast<int>(checks.size()) ? 0 : 1, out};
}

}  // namespace nurad
