#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "lvf/cli.hpp"
#include "lvf/compute.hpp"
#include "lvf/errors.hpp"
#include "lvf/suite_config.hpp"
#include "lvf/suites.hpp"
#include "lvf/weyl.hpp"

using namespace lvf;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name, const std::string& content) {
  const auto p = std::filesystem::temp_directory_path() / name;
  std::ofstream(p) << content;
  return p;
}

} // namespace

TEST_CASE("list-suites names every suite") {
  const Run r = run({"list-suites"});
  CHECK(r.code == 0);
  for (const auto& name : suite_names()) CHECK(r.out.find(name + "\n") != std::string::npos);
  CHECK(suite_names().size() == 11);
}

TEST_CASE("verify writes a JSON report and follows the exit contract") {
  const Run r = run({"verify", "js-identities", "--window", "8", "--seed", "7"});
  CHECK(r.code == kExitPass);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["suite"] == "js-identities");
  CHECK(j["seed"] == 7);
  CHECK(j["schema_version"] == Report::kSchemaVersion);
  CHECK(j["timestamp"].is_null());
  CHECK(j["checks"].size() > 5);

  CHECK(run({"verify", "wavelet", "--n", "2", "--max-exp", "30"}).code == kExitPass);
  const Run neg = run({"verify", "sine-examples", "--quadrature-nodes", "100"});
  CHECK(neg.code == kExitCheckFailure);
}

TEST_CASE("errors exit with a distinct code") {
  CHECK(run({"verify", "no-such-suite"}).code == kExitError);
  CHECK(run({"verify", "js-identities", "--window", "40"}).code == kExitError);
  CHECK(run({"verify", "schrodinger-virasoro", "--s", "1/3"}).code == kExitError);
  CHECK(run({"verify", "weyl-core", "--bogus"}).code == kExitError);
  CHECK(run({"compute", "d-matrix", "--basis", "nope"}).code == kExitError);
  CHECK(run({}).code == kExitError);
}

TEST_CASE("reports are byte-identical for a fixed seed") {
  for (const char* suite : {"weyl-core", "dynamics", "cuntz-identities", "homotope"}) {
    const Run a = run({"verify", suite, "--seed", "3"});
    const Run b = run({"verify", suite, "--seed", "3"});
    CHECK(a.out == b.out);
  }
  CHECK(run({"verify", "weyl-core", "--seed", "3"}).out != run({"verify", "weyl-core", "--seed", "4"}).out);
}

TEST_CASE("config file, flag overrides and output path") {
  const auto cfg = temp_file("lvf_test_config.json",
                             R"({"seed": 5, "instances": 12, "tolerances": {"semigroup": 1e-9}})");
  const auto out = std::filesystem::temp_directory_path() / "lvf_test_report.json";
  std::filesystem::remove(out);
  const Run r = run({"verify", "js-identities", "--config", cfg.string(), "--seed", "9", "--out", out.string(),
                     "--timestamp", "2026-01-01T00:00:00Z"});
  CHECK(r.code == kExitPass);
  CHECK(r.out.empty());
  std::ifstream in(out);
  const auto j = nlohmann::json::parse(in);
  CHECK(j["seed"] == 9);
  CHECK(j["parameters"]["instances"] == "12");
  CHECK(j["timestamp"] == "2026-01-01T00:00:00Z");

  const auto bad = temp_file("lvf_test_bad.json", R"({"sed": 5})");
  CHECK(run({"verify", "weyl-core", "--config", bad.string()}).code == kExitError);
  CHECK_THROWS_AS(SuiteConfig::from_json_text(R"({"lambda": 0.5})"), Error);
  CHECK(SuiteConfig::from_json_text(R"({"lambda": "1/3"})").lambda == Rational(1, 3));
}

TEST_CASE("default config path from the environment") {
  const auto cfg = temp_file("lvf_env_config.json", R"({"seed": 21})");
  setenv(kConfigEnvVar, cfg.string().c_str(), 1);
  const Run r = run({"verify", "weyl-core"});
  unsetenv(kConfigEnvVar);
  CHECK(nlohmann::json::parse(r.out)["seed"] == 21);
}

TEST_CASE("compute targets") {
  const Run m = run({"compute", "d-matrix", "--basis", "x2dx", "--window", "4"});
  CHECK(m.code == 0);
  CHECK(m.out.find("-8/3*pi") != std::string::npos);
  std::size_t diag = 0;
  for (std::size_t p = m.out.find("      -pi"); p != std::string::npos; p = m.out.find("      -pi", p + 1)) ++diag;
  CHECK(diag == 4);

  CHECK(run({"compute", "weyl-element", "--op", "D(E12)"}).out == "x[1] d[2]\n");
  CHECK(evaluate_weyl_expression("[D(E12), D(E21)]") == "x[1] d[1] + (-1) x[2] d[2]");
  CHECK(evaluate_weyl_expression("eps(I1, I1)") == WeylElement::parse("x[1]^2 d[1]^2 + 2 x[1] d[1]").to_string());
  CHECK(evaluate_weyl_expression("del(e1 + 2 e3)") == WeylElement::parse("d[1] + 2 d[3]").to_string());
  CHECK(run({"compute", "cuntz-element", "--op", "s*[1] s[1]"}).out == "(1)\n");

  const Run t = run({"compute", "cocycle-table", "--algebra", "sl2", "--u", "h", "--degree", "2"});
  CHECK(t.code == 0);
  std::istringstream lines(t.out);
  std::string header;
  std::getline(lines, header);
  std::vector<std::vector<std::string>> rows;
  for (std::string line; std::getline(lines, line);) {
    std::istringstream cells(line);
    std::vector<std::string> row;
    for (std::string c; std::getline(cells, c, '\t');) row.push_back(c);
    rows.push_back(row);
  }
  REQUIRE(rows.size() == 3);
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t b = 0; b < 3; ++b)
      CHECK(GScalar::parse(rows[a][b + 1]) == -GScalar::parse(rows[b][a + 1]));
}

#ifdef LVF_CLI_PATH
TEST_CASE("installed binary exit codes") {
  const std::string bin = LVF_CLI_PATH;
  CHECK(std::system((bin + " verify weyl-core > /dev/null").c_str()) == 0);
  CHECK(WEXITSTATUS(std::system((bin + " verify sine-examples --quadrature-nodes 100 > /dev/null").c_str())) == 1);
  CHECK(WEXITSTATUS(std::system((bin + " verify nope > /dev/null 2>&1").c_str())) == 2);
}
#endif
