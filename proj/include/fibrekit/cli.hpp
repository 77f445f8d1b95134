#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "fibrekit/input.hpp"

namespace fibrekit::cli {

enum ExitCode : int {
  kOk = 0,
  kComputationError = 1,
  kTheoremViolation = 2,
  kInputError = 3,
};

struct CommandOptions {
  std::optional<int> n_max;
  std::optional<int> n_check;
  std::optional<std::string> report_path;
  ReportFormat format = ReportFormat::Text;
};

/// Commands: analyze, coeffs, fundamental-lemma, series, reduction,
/// "check cm-fiber", "check depth-fiber", "check min-mult", "check depth-g".
/// Standard output receives nothing unless the exit code is kOk.
int run_command(const std::string& command, const InputDocument& doc, const CommandOptions& options,
                std::ostream& out, std::ostream& err);

/// Analyzes the embedded reference examples and compares with known values.
int selftest(std::ostream& out, std::ostream& err);

/// Full command line without the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fibrekit::cli
