#include "alphakit/report.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>

namespace alphakit {

CheckResult& VerificationReport::add(std::string name, double value, double bound, double tol,
                                     Relation relation, bool hard, std::string note) {
  CheckResult c;
  c.name = std::move(name);
  c.value = value;
  c.bound = bound;
  c.tol = tol;
  c.relation = relation;
  c.hard = hard;
  c.note = std::move(note);
  c.passed = relation == Relation::at_most ? value <= bound + tol : value >= bound - tol;
  checks_.push_back(std::move(c));
  return checks_.back();
}

const CheckResult* VerificationReport::find(const std::string& name) const {
  auto it = std::find_if(checks_.begin(), checks_.end(),
                         [&](const CheckResult& c) { return c.name == name; });
  return it == checks_.end() ? nullptr : &*it;
}

bool VerificationReport::all_hard_passed() const {
  return std::all_of(checks_.begin(), checks_.end(),
                     [](const CheckResult& c) { return !c.hard || c.passed; });
}

nlohmann::ordered_json VerificationReport::to_json() const {
  nlohmann::ordered_json checks = nlohmann::ordered_json::array();
  for (const auto& c : checks_) {
    nlohmann::ordered_json j;
    j["name"] = c.name;
    j["value"] = c.value;
    j["bound"] = c.bound;
    j["tol"] = c.tol;
    j["relation"] = c.relation == Relation::at_most ? "<=" : ">=";
    j["passed"] = c.passed;
    j["hard"] = c.hard;
    if (!c.note.empty()) j["note"] = c.note;
    checks.push_back(std::move(j));
  }
  nlohmann::ordered_json out;
  out["checks"] = std::move(checks);
  out["passed"] = all_hard_passed();
  return out;
}

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

std::string VerificationReport::to_csv() const {
  std::string out = "name,value,bound,tol,relation,passed,hard\n";
  for (const auto& c : checks_) {
    out += c.name + ',' + format_double(c.value) + ',' + format_double(c.bound) + ',' +
           format_double(c.tol) + ',' + (c.relation == Relation::at_most ? "<=" : ">=") + ',' +
           (c.passed ? "true" : "false") + ',' + (c.hard ? "true" : "false") + '\n';
  }
  return out;
}

}  // namespace alphakit
