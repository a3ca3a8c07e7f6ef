#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "signbal/enumeration.hpp"
#include "signbal/patterns.hpp"

namespace signbal::cli {

enum class Command { Contains, Enumerate, Count, Balance, Verify, Scan, Lis };
enum class Format { Table, Json, Csv };

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitUsage = 2;

struct CliRequest {
  Command command = Command::Count;
  PatternSet patterns;
  std::optional<std::size_t> n;
  std::size_t n_min = 2;
  std::optional<std::size_t> n_max;
  /// Host word for contains/lis, target id for verify.
  std::string subject;
  Format format = Format::Table;
  std::optional<std::string> output;
  std::optional<std::string> orbits_output;
  unsigned parallelism = 1;
  bool oracle = false;
  bool timing = true;
  std::uint64_t cap = kDefaultEmitCap;
  std::size_t oracle_guard = kDefaultOracleGuard;

  EnumerationOptions enumeration_options() const;
};

/// Bad command line; maps to exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// --help was given; `text` is the rendered help.
struct HelpRequested {
  std::string text;
};

/// Parses arguments (without the program name). Throws UsageError or
/// HelpRequested. `oracle_guard` seeds CliRequest::oracle_guard.
CliRequest parse_args(std::span<const std::string> args,
                      std::size_t oracle_guard = kDefaultOracleGuard);

/// Executes a validated request, writing the report to req.output (atomic
/// replace) or `out`. Returns 0 on success, 1 when a verification fails, a
/// counterexample is reported, or a guard trips (a JSON error object is
/// written to `out`).
int run(const CliRequest& req, std::ostream& out, std::ostream& err);

/// SIGNBAL_GUARD_N, if set. Throws UsageError when it is not a positive
/// integer.
std::optional<std::size_t> guard_from_environment();

/// parse_args + run with the exit-code contract applied to every failure.
int main_entry(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace signbal::cli
