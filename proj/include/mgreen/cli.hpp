#pragma once

#include <optional>
#include <string>

namespace mgreen {

struct RunConfig {
  std::string input;
  std::string command;
  /// "a0,a1,..." overriding the file's divisor.
  std::optional<std::string> divisor;
  std::optional<std::string> x;
  std::optional<std::string> y;
  std::string method = "both";
  std::optional<std::string> points;
  std::optional<int> decimal;
  bool machine = false;
};

struct RunResult {
  int exit_code = 0;
  std::string out;
  std::string err;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitInternal = 3;

/// Executes one command. Never throws: errors become exit codes and text on `err`.
RunResult run(const RunConfig& config);

}  // namespace mgreen
