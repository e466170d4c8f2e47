#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace alphakit {

/// How a check's value is compared with its bound.
enum class Relation { at_most, at_least };

struct CheckResult {
  std::string name;
  double value = 0.0;
  double bound = 0.0;
  double tol = 0.0;
  Relation relation = Relation::at_most;
  bool passed = false;
  /// Soft checks are reported but never fail a run.
  bool hard = true;
  std::string note;
};

class VerificationReport {
 public:
  /// Records value against bound: at_most passes when value <= bound + tol,
  /// at_least when value >= bound - tol. NaN values fail.
  CheckResult& add(std::string name, double value, double bound, double tol,
                   Relation relation = Relation::at_most, bool hard = true, std::string note = {});

  const std::vector<CheckResult>& checks() const noexcept { return checks_; }
  const CheckResult* find(const std::string& name) const;
  bool all_hard_passed() const;

  /// {"checks":[{name, value, bound, tol, relation, passed, hard, note?}], "passed": bool}
  nlohmann::ordered_json to_json() const;
  /// Header row then one row per check.
  std::string to_csv() const;

 private:
  std::vector<CheckResult> checks_;
};

/// Shortest round-trip decimal for CSV output.
std::string format_double(double v);

}  // namespace alphakit
