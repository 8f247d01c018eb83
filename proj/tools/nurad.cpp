// nurad: numerical radius, extremality verdicts and witnesses from the command line.
//
//   nurad radius   M.json
//   nurad classify M.json          exit 0 extreme, 1 not extreme, 2 unknown, 3 error
//   nurad witness  M.json
//   nurad verify   M.json W.json   exit 0 when the witness checks out
//   nurad range    M.json --format svg --points 720
//   nurad selftest

#include <cstdio>
#include <exception>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "nurad/commands.hpp"
#include "nurad/io.hpp"

int main(int argc, char** argv) {
  using namespace nurad;
  CLI::App app{"numerical radius and nu-extreme contraction toolkit"};
  app.set_version_flag("--version", std::string(kToolVersion));
  app.require_subcommand(1);

  CliFlags flags;
  std::string out;
  app.add_option("--tol", flags.tol, "verdict tolerance")->capture_default_str();
  app.add_option("--samples", flags.samples, "random unit vectors for the sampled radius")->capture_default_str();
  app.add_option("--seed", flags.seed, "RNG seed")->capture_default_str();
  app.add_option("--points", flags.points, "boundary points for range")->capture_default_str();
  app.add_option("--format", flags.format, "range output: csv or svg")->capture_default_str();
  app.add_option("-o,--out", out, "write here (atomically) instead of stdout");

  std::string matrix, witness;
  auto* radius = app.add_subcommand("radius", "sweep and sampled numerical radius");
  auto* classify = app.add_subcommand("classify", "extreme / not extreme / unknown, with witness");
  auto* witness_cmd = app.add_subcommand("witness", "classify and emit only the witness");
  auto* verify = app.add_subcommand("verify", "re-check a witness document against a matrix");
  auto* range = app.add_subcommand("range", "boundary of the numerical range as CSV or SVG");
  auto* selftest = app.add_subcommand("selftest", "regression corpus and oracle checks");
  for (auto* sc : {radius, classify, witness_cmd, verify, range})
    sc->add_option("matrix", matrix, "matrix document")->required()->check(CLI::ExistingFile);
  verify->add_option("witness", witness, "witness document or report")->required()->check(CLI::ExistingFile);
  for (auto* sc : {radius, classify, witness_cmd, verify, range, selftest}) sc->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitError;
  }

  try {
    CommandResult r;
    if (radius->parsed()) r = cmd_radius(matrix, flags);
    else if (classify->parsed()) r = cmd_classify(matrix, flags);
    else if (witness_cmd->parsed()) r = cmd_witness(matrix, flags);
    else if (verify->parsed()) r = cmd_verify(matrix, witness, flags);
    else if (range->parsed()) r = cmd_range(matrix, flags);
    else if (selftest->parsed()) r = cmd_selftest(flags);

    if (out.empty()) {
      std::fwrite(r.output.data(), 1, r.output.size(), stdout);
    } else {
      write_file_atomic(out, r.output);
    }
    return r.exit_code;
  } catch (const std::exception& e) {
    std::cerr << "nurad: " << e.what() << "\n";
  }
  return kExitError;
}
