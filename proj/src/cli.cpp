#include "lvf/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <optional>

#include "CLI11.hpp"
#include "lvf/compute.hpp"
#include "lvf/errors.hpp"
#include "lvf/suite_config.hpp"
#include "lvf/suites.hpp"

namespace lvf {

namespace {

std::vector<Rational> parse_rationals(const std::vector<std::string>& v) {
  std::vector<Rational> out;
  for (const auto& s : v) out.push_back(Rational::parse(s));
  return out;
}

void write_output(const std::string& text, const std::optional<std::string>& path, std::ostream& out) {
  if (!path) {
    out << text;
    return;
  }
  std::ofstream f(*path, std::ios::binary);
  if (!f) throw InvalidArgument("cannot write '" + *path + "'");
  f << text;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact verification of linear vector field identities", "lvf"};
  app.set_help_flag("--help", "Print help");
  app.require_subcommand(1);

  // verify
  CLI::App* verify = app.add_subcommand("verify", "Run a verification suite and print its report");
  verify->set_help_flag("--help", "Print help");
  std::string suite;
  std::optional<std::string> config_path;
  SuiteConfig flags;
  std::optional<std::uint64_t> seed;
  std::optional<std::int64_t> window, label_range, instances, n, max_exp, degree;
  std::optional<int> nodes;
  std::optional<std::string> lambda, rho, s, scalar_mode, out_path, timestamp;
  std::vector<std::string> c_list, tolerances;
  std::vector<std::int64_t> h_list;
  std::optional<double> t;
  verify->add_option("suite", suite, "Suite name")->required();
  verify->add_option("--config", config_path, "JSON config file (default from $LVF_CONFIG)");
  verify->add_option("--seed", seed);
  verify->add_option("--window", window);
  verify->add_option("--label-range", label_range);
  verify->add_option("--instances", instances);
  verify->add_option("--quadrature-nodes", nodes);
  verify->add_option("--lambda", lambda);
  verify->add_option("--c", c_list)->delimiter(',');
  verify->add_option("--rho", rho);
  verify->add_option("--s", s);
  verify->add_option("--n", n);
  verify->add_option("--max-exp", max_exp);
  verify->add_option("--degree", degree);
  verify->add_option("--h", h_list)->delimiter(',');
  verify->add_option("--t", t);
  verify->add_option("--scalar-mode", scalar_mode);
  verify->add_option("--tolerance", tolerances, "key=value, repeatable");
  verify->add_option("--out", out_path);
  verify->add_option("--timestamp", timestamp);

  // compute
  CLI::App* comp = app.add_subcommand("compute", "Print an object in canonical text form");
  comp->set_help_flag("--help", "Print help");
  std::string what;
  ComputeOptions copts;
  std::optional<std::int64_t> cwindow;
  std::optional<std::string> clambda, crho, cs, cout_path;
  std::vector<std::string> cc_list;
  comp->add_option("what", what, "d-matrix | weyl-element | cuntz-element | cocycle-table")->required();
  comp->add_option("--basis", copts.basis);
  comp->add_option("--window", cwindow);
  comp->add_option("--n", copts.n);
  comp->add_option("--lambda", clambda);
  comp->add_option("--c", cc_list)->delimiter(',');
  comp->add_option("--rho", crho);
  comp->add_option("--s", cs);
  comp->add_option("--h", copts.h)->delimiter(',');
  comp->add_option("--op", copts.op);
  comp->add_option("--algebra", copts.algebra);
  comp->add_option("--u", copts.u);
  comp->add_option("--degree", copts.degree);
  comp->add_option("--seed", copts.seed);
  comp->add_option("--out", cout_path);

  app.add_subcommand("list-suites", "List suite names");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }

  try {
    if (app.got_subcommand("list-suites")) {
      for (const auto& name : suite_names()) out << name << "\n";
      return kExitPass;
    }
    if (comp->parsed()) {
      copts.window = cwindow;
      if (clambda) copts.lambda = Rational::parse(*clambda);
      if (crho) copts.rho = Rational::parse(*crho);
      if (cs) copts.s = Rational::parse(*cs);
      copts.c = parse_rationals(cc_list);
      write_output(compute(what, copts), cout_path, out);
      return kExitPass;
    }

    SuiteConfig cfg;
    if (!config_path) {
      if (const char* env = std::getenv(kConfigEnvVar); env && *env) config_path = env;
    }
    if (config_path) cfg = SuiteConfig::from_file(*config_path);
    flags.suite = suite;
    flags.seed = seed;
    flags.window = window;
    flags.label_range = label_range;
    flags.instances = instances;
    flags.quadrature_nodes = nodes;
    if (lambda) flags.lambda = Rational::parse(*lambda);
    if (!c_list.empty()) flags.c = parse_rationals(c_list);
    if (rho) flags.rho = Rational::parse(*rho);
    if (s) flags.s = Rational::parse(*s);
    flags.n = n;
    flags.max_exp = max_exp;
    flags.degree = degree;
    if (!h_list.empty()) flags.h = h_list;
    flags.t = t;
    flags.scalar_mode = scalar_mode;
    for (const auto& kv : tolerances) {
      const auto eq = kv.find('=');
      if (eq == std::string::npos) throw InvalidArgument("tolerance must be key=value, got '" + kv + "'");
      try {
        flags.tolerances[kv.substr(0, eq)] = std::stod(kv.substr(eq + 1));
      } catch (const std::exception&) {
        throw InvalidArgument("bad tolerance value in '" + kv + "'");
      }
    }
    flags.out = out_path;
    flags.timestamp = timestamp;
    cfg.merge(flags);

    const Report report = run_suite(cfg);
    write_output(report.to_json() + "\n", cfg.out, out);
    return report.all_passed() ? kExitPass : kExitCheckFailure;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
}

} // namespace lvf
