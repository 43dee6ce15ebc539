// Command-line front end. `run` holds all logic so tests can drive it
// in-process; tools/balloon_cli.cpp is a thin main().
#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace balloon::cli {

enum ExitCode : int { kPass = 0, kCheckFailed = 1, kUsage = 2 };

inline constexpr const char* kSchemaVersion = "1";

struct RunConfig {
  std::string command;  // series | verify | plotdata | sample
  std::string target;   // positional argument of the command
  int order = 12;
  std::optional<std::vector<std::size_t>> grid;
  std::size_t samples = 100000;
  std::uint64_t seed = 1;
  double tol = 1e-9;
  double chain_tol = 1e-12;
  double paper_tol = 1e-5;
  unsigned threads = 0;
  std::string out;                    // empty = stdout
  std::optional<std::string> format;  // json | csv; default depends on command
};

// Throws std::invalid_argument with a user-facing message.
void validate(const RunConfig& cfg);

// Parses argv and runs. Never throws; returns an ExitCode.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// The individual commands, for an already validated config. Results go to
// `out` unless cfg.out names a file.
int cmd_series(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_plotdata(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_sample(const RunConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace balloon::cli
