#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace kdvspec::cli {

/// One invocation. Exactly one potential source: family + s, or
/// potential + tower (family "custom" or empty).
struct JobSpec {
  std::string command;
  std::string family;
  std::optional<unsigned> s;
  std::string potential;
  std::string tower;
  std::optional<std::string> g2, g3, lambda0, mu0, tau0;
  std::string format = "text";
  int sign = -1;
  unsigned s_max = 8;
};

enum ExitCode { Ok = 0, CheckFailed = 2, Unsupported = 3, ParseFailed = 4 };

struct ResultDoc {
  nlohmann::json input = nlohmann::json::object();
  nlohmann::json stages = nlohmann::json::object();
  nlohmann::json checks = nlohmann::json::object();
  std::vector<std::string> warnings;
  nlohmann::json timings = nlohmann::json::object();
  std::string error;  // "<stage>: <Code>: message" when a stage raised
  int exit_code = Ok;

  /// Keys sorted; timings omitted unless asked for, so equal jobs give
  /// byte-identical output.
  std::string json(bool with_timings = true) const;
  std::string text() const;
};

const std::vector<std::string>& commands();

ResultDoc run_command(const JobSpec& job);
/// CheckFailed when any check is false and no stage raised.
void settle_exit_code(ResultDoc& doc);

/// Parses argv into a job, runs it and prints the document. Returns the exit code.
int main_entry(int argc, char** argv);

}  // namespace kdvspec::cli
