#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include "wq/algebras.hpp"

namespace wq::cli {

enum class Format { Text, Json, Latex };

enum ExitCode : int { kOk = 0, kMismatch = 1, kUsage = 2 };

struct RunConfig {
  /// matrices | verify-cartan | lambda | bracket | closure | dual | emit-t2 | verify-all
  std::string command;
  /// dn | e6 | g2; verify-all also accepts "all" (D4..D8, E6, G2).
  std::string algebra;
  std::optional<int> n;
  Format format = Format::Text;
  std::optional<std::pair<int, int>> pair;
  std::optional<std::string> output_path;
};

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Throws UsageError when the flag combination is invalid.
void validate(const RunConfig& config);

/// Runs one command; the report goes to `out` (or --out), diagnostics to `err`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Same, against an explicitly supplied preset (used to exercise failure paths).
int run_with_preset(const RunConfig& config, const AlgebraPreset& preset, std::ostream& out, std::ostream& err);

/// Parses argv and runs; never throws.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace wq::cli
