#pragma once

// Subcommands of the `ips` tool as plain functions returning a JSON report and
// an exit code, plus the argument front end shared by the binary and tests.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "ips/io.hpp"

namespace ips::cli {

enum ExitCode : int { kOk = 0, kValidationFailure = 2, kNotFound = 3, kUsage = 4 };

struct CommandResult {
  int exit_code = kOk;
  Json report = Json::object();
  std::string error;  // non-empty for usage and document errors
};

struct ConstructArgs {
  std::optional<int> k;
  std::optional<std::size_t> trim;
  std::optional<long> dilate;
  bool prime = false;
  std::optional<int> m;
  std::optional<int> n;
  std::optional<long> d;
  bool unique_min = false;
};

struct BoundsArgs {
  bool all = false;
  std::optional<std::filesystem::path> known_values;
  std::optional<std::string> diameter;
};

struct PackArgs {
  int k = 0;
  std::uint64_t seed = 1;
  int restarts = 16;
  int iterations = 3000;
  unsigned jobs = 1;
};

struct SearchArgs {
  int n = 0;
  long bmax = 0;
  unsigned jobs = 1;
  bool unit4 = false;  // enumerate 4-point unit sets instead of d(2, n)
};

CommandResult run_construct(const ConstructArgs& args);
CommandResult run_verify(const Json& document, std::optional<long> expected_dim = std::nullopt);
CommandResult run_bounds(const BoundsArgs& args);
CommandResult run_pack(const PackArgs& args);
CommandResult run_search(const SearchArgs& args);
CommandResult run_classify(const Json& document, std::optional<long> radius = std::nullopt);

/// Parses argv (without the program name), runs the subcommand, and writes
/// --out / --emit files. Help output lands in `error` with exit code 0.
CommandResult run(const std::vector<std::string>& args);

}  // namespace ips::cli
