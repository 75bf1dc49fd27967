#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace lvf {

class WeylElement;

enum class Status { pass, fail, skipped };

std::string status_name(Status s);

/// One verified identity or oracle comparison.
struct CheckResult {
  std::string name;
  Status status = Status::pass;
  std::string window;
  std::string safe_window;
  std::optional<double> max_abs_error;
  /// Mismatching term (canonical text) or other evidence for a failure.
  std::optional<std::string> witness;
  /// Required for skipped checks; free-form detail otherwise.
  std::string reason;

  bool passed() const { return status == Status::pass; }
};

CheckResult make_check(std::string name, bool ok, std::string window = {},
                       std::string safe_window = {});

/// Compares two Weyl elements exactly; on mismatch the first differing term of
/// lhs - rhs becomes the witness.
CheckResult compare_weyl(std::string name, const WeylElement& lhs, const WeylElement& rhs,
                         std::string window = {}, std::string safe_window = {});

/// Float comparison with tolerance; records the observed max error.
CheckResult compare_float(std::string name, double max_abs_error, double tolerance,
                          std::string window = {});

struct Report {
  static constexpr int kSchemaVersion = 1;

  std::string suite;
  std::uint64_t seed = 0;
  std::optional<std::string> timestamp;
  std::map<std::string, std::string> environment;
  std::map<std::string, std::string> parameters;
  std::vector<CheckResult> checks;

  /// Exit-code contract: true iff no non-skipped check failed.
  bool all_passed() const;
  std::size_t count(Status s) const;
  /// Sorts checks by name (stable) so that assembly order does not matter.
  void finalize();
  std::string to_json() const;
};

/// Compiler, standard library and GMP versions; deterministic per build.
std::map<std::string, std::string> environment_fingerprint();

} // namespace lvf
