#pragma once

// Command implementations behind the `nurad` executable. Each returns the
// exact bytes the tool writes plus its exit code; failures throw NuradError
// (the executable maps those to exit code 3).

#include <cstdint>
#include <filesystem>
#include <string>

namespace nurad {

struct CliFlags {
  double tol = 1e-7;
  std::int64_t samples = 100000;
  std::uint64_t seed = 42;
  int points = 360;
  std::string format = "csv";
};

struct CommandResult {
  int exit_code = 0;
  std::string output;
};

inline constexpr int kExitExtreme = 0;
inline constexpr int kExitNotExtreme = 1;
inline constexpr int kExitUnknown = 2;
inline constexpr int kExitError = 3;

CommandResult cmd_radius(const std::filesystem::path& path, const CliFlags& flags);
/// Exit 0 / 1 / 2 for Extreme / NotExtreme / Unknown.
CommandResult cmd_classify(const std::filesystem::path& path, const CliFlags& flags);
/// Same exit codes as classify; the report keeps the witness and its check only.
CommandResult cmd_witness(const std::filesystem::path& path, const CliFlags& flags);
/// Exit 0 when the witness verifies, 1 otherwise.
CommandResult cmd_verify(const std::filesystem::path& matrix_path, const std::filesystem::path& witness_path,
                         const CliFlags& flags);
/// CSV ("theta,re,im") or SVG depending on flags.format; BadFormat otherwise.
CommandResult cmd_range(const std::filesystem::path& path, const CliFlags& flags);
/// Regression corpus and oracle checks; a pass table, exit 0 iff all pass.
CommandResult cmd_selftest(const CliFlags& flags);

}  // namespace nurad
