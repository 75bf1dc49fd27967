#include "lvf/report.hpp"

#include <algorithm>
#include <sstream>

#include <gmp.h>
#include "json.hpp"

#include "lvf/weyl.hpp"

namespace lvf {

std::string status_name(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::skipped: return "skipped";
  }
  return "?";
}

CheckResult make_check(std::string name, bool ok, std::string window, std::string safe_window) {
  CheckResult r;
  r.name = std::move(name);
  r.status = ok ? Status::pass : Status::fail;
  r.window = std::move(window);
  r.safe_window = std::move(safe_window);
  return r;
}

CheckResult compare_weyl(std::string name, const WeylElement& lhs, const WeylElement& rhs,
                         std::string window, std::string safe_window) {
  CheckResult r = make_check(std::move(name), lhs == rhs, std::move(window), std::move(safe_window));
  if (!r.passed()) {
    const WeylElement diff = lhs - rhs;
    const auto& [m, c] = *diff.terms().begin();
    r.witness = WeylElement::monomial(m, c).to_string();
  }
  return r;
}

CheckResult compare_float(std::string name, double max_abs_error, double tolerance,
                          std::string window) {
  CheckResult r = make_check(std::move(name), max_abs_error <= tolerance, std::move(window));
  r.max_abs_error = max_abs_error;
  std::ostringstream os;
  os << "tolerance " << tolerance;
  r.reason = os.str();
  return r;
}

bool Report::all_passed() const {
  return std::none_of(checks.begin(), checks.end(),
                      [](const CheckResult& c) { return c.status == Status::fail; });
}

std::size_t Report::count(Status s) const {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [s](const CheckResult& c) { return c.status == s; }));
}

void Report::finalize() {
  std::stable_sort(checks.begin(), checks.end(),
                   [](const CheckResult& a, const CheckResult& b) { return a.name < b.name; });
}

std::string Report::to_json() const {
  nlohmann::ordered_json j;
  j["schema_version"] = kSchemaVersion;
  j["suite"] = suite;
  j["seed"] = seed;
  j["timestamp"] = timestamp ? nlohmann::ordered_json(*timestamp) : nlohmann::ordered_json(nullptr);
  j["environment"] = environment;
  j["parameters"] = parameters;
  j["summary"] = {{"pass", count(Status::pass)},
                  {"fail", count(Status::fail)},
                  {"skipped", count(Status::skipped)}};
  auto arr = nlohmann::ordered_json::array();
  for (const auto& c : checks) {
    nlohmann::ordered_json e;
    e["name"] = c.name;
    e["status"] = status_name(c.status);
    e["window"] = c.window;
    e["safe_window"] = c.safe_window;
    e["max_abs_error"] = c.max_abs_error ? nlohmann::ordered_json(*c.max_abs_error)
                                         : nlohmann::ordered_json(nullptr);
    e["witness"] = c.witness ? nlohmann::ordered_json(*c.witness) : nlohmann::ordered_json(nullptr);
    e["reason"] = c.reason;
    arr.push_back(std::move(e));
  }
  j["checks"] = std::move(arr);
  return j.dump(2) + "\n";
}

std::map<std::string, std::string> environment_fingerprint() {
  std::map<std::string, std::string> env;
#if defined(__clang__)
  env["compiler"] = std::string("clang ") + __clang_version__;
#elif defined(__GNUC__)
  env["compiler"] = std::string("gcc ") + __VERSION__;
#else
  env["compiler"] = "unknown";
#endif
  env["cplusplus"] = std::to_string(__cplusplus);
  env["gmp"] = gmp_version;
  env["nlohmann_json"] = std::to_string(NLOHMANN_JSON_VERSION_MAJOR) + "." +
                         std::to_string(NLOHMANN_JSON_VERSION_MINOR) + "." +
                         std::to_string(NLOHMANN_JSON_VERSION_PATCH);
  return env;
}

} // namespace lvf
