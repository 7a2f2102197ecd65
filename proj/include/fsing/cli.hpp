#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fsing/session.hpp"

namespace fsing {

struct CliOptions {
  std::string ideal;
  std::string other;
  std::string poly;
  std::string map;
  std::string at;
  std::string c;
  std::string order = "degrevlex";
  std::optional<int> e;
  std::optional<int> emax;
  std::optional<std::string> t;
  std::optional<std::string> tmax;
  std::optional<std::string> tolerance;
  std::optional<std::uint64_t> denom;
  std::optional<std::uint64_t> m;
  bool round_up_q = false;
  unsigned threads = 1;
  bool json = false;
  bool timing = false;
};

struct RunOutcome {
  /// 0 computed, 1 error, 2 computed but uncertified, 3 inconclusive.
  int exit_code = 0;
  std::string output;
  std::vector<std::string> warnings;
};

const std::vector<std::string>& cli_commands();

/// Runs one subcommand and renders the result envelope. Never throws for
/// library errors; they become an error object with exit code 1.
RunOutcome run_command(const std::string& command, const Session& session, const CliOptions& options);

/// Parses the session text first, so parse errors share the error envelope.
RunOutcome run_command_text(const std::string& command, const std::string& session_text,
                            const CliOptions& options);
RunOutcome run_command_file(const std::string& command, const std::string& path, const CliOptions& options);

}  // namespace fsing
