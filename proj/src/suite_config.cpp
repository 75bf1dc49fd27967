#include "lvf/suite_config.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

#include "lvf/errors.hpp"

namespace lvf {

namespace {

using nlohmann::json;

Rational rational_field(const json& v, const std::string& key) {
  if (v.is_string()) return Rational::parse(v.get<std::string>());
  if (v.is_number_integer()) return Rational(v.get<std::int64_t>());
  throw InvalidArgument("'" + key + "' must be a rational string such as \"1/2\"");
}

std::string fmt(double x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

} // namespace

SuiteConfig SuiteConfig::from_json_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("config: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("config must be a JSON object");
  static const std::set<std::string> known = {
      "suite", "seed", "window", "label_range", "instances", "quadrature_nodes", "lambda", "c",
      "rho", "s", "n", "max_exp", "degree", "h", "t", "scalar_mode", "tolerances", "out"};
  SuiteConfig cfg;
  try {
    for (const auto& [key, v] : j.items()) {
      if (!known.count(key)) throw InvalidArgument("unknown config key '" + key + "'");
      if (key == "suite") cfg.suite = v.get<std::string>();
      else if (key == "seed") cfg.seed = v.get<std::uint64_t>();
      else if (key == "window") cfg.window = v.get<std::int64_t>();
      else if (key == "label_range") cfg.label_range = v.get<std::int64_t>();
      else if (key == "instances") cfg.instances = v.get<std::int64_t>();
      else if (key == "quadrature_nodes") cfg.quadrature_nodes = v.get<int>();
      else if (key == "lambda") cfg.lambda = rational_field(v, key);
      else if (key == "rho") cfg.rho = rational_field(v, key);
      else if (key == "s") cfg.s = rational_field(v, key);
      else if (key == "c") {
        std::vector<Rational> c;
        for (const auto& x : v) c.push_back(rational_field(x, key));
        cfg.c = c;
      } else if (key == "n") cfg.n = v.get<std::int64_t>();
      else if (key == "max_exp") cfg.max_exp = v.get<std::int64_t>();
      else if (key == "degree") cfg.degree = v.get<std::int64_t>();
      else if (key == "h") cfg.h = v.get<std::vector<std::int64_t>>();
      else if (key == "t") cfg.t = v.get<double>();
      else if (key == "scalar_mode") cfg.scalar_mode = v.get<std::string>();
      else if (key == "tolerances") cfg.tolerances = v.get<std::map<std::string, double>>();
      else if (key == "out") cfg.out = v.get<std::string>();
    }
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("config: ") + e.what());
  }
  return cfg;
}

SuiteConfig SuiteConfig::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot read config file " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return from_json_text(ss.str());
}

void SuiteConfig::merge(const SuiteConfig& o) {
  if (!o.suite.empty()) suite = o.suite;
  auto take = [](auto& dst, const auto& src) {
    if (src) dst = src;
  };
  take(seed, o.seed);
  take(scalar_mode, o.scalar_mode);
  take(window, o.window);
  take(label_range, o.label_range);
  take(instances, o.instances);
  take(quadrature_nodes, o.quadrature_nodes);
  take(lambda, o.lambda);
  take(c, o.c);
  take(rho, o.rho);
  take(s, o.s);
  take(n, o.n);
  take(max_exp, o.max_exp);
  take(degree, o.degree);
  take(h, o.h);
  take(t, o.t);
  take(out, o.out);
  take(timestamp, o.timestamp);
  for (const auto& [k, v] : o.tolerances) tolerances[k] = v;
}

double SuiteConfig::tolerance(const std::string& key, double fallback) const {
  auto it = tolerances.find(key);
  return it == tolerances.end() ? fallback : it->second;
}

std::map<std::string, std::string> SuiteConfig::describe() const {
  std::map<std::string, std::string> p;
  auto put = [&](const std::string& k, const auto& v) {
    if (v) {
      if constexpr (std::is_same_v<std::decay_t<decltype(*v)>, Rational>) {
        p[k] = v->to_string();
      } else if constexpr (std::is_same_v<std::decay_t<decltype(*v)>, double>) {
        p[k] = fmt(*v);
      } else {
        p[k] = std::to_string(*v);
      }
    }
  };
  put("window", window);
  put("label_range", label_range);
  put("instances", instances);
  put("quadrature_nodes", quadrature_nodes);
  put("lambda", lambda);
  put("rho", rho);
  put("s", s);
  put("n", n);
  put("max_exp", max_exp);
  put("degree", degree);
  put("t", t);
  if (c) {
    std::string txt;
    for (const auto& x : *c) txt += (txt.empty() ? "" : ",") + x.to_string();
    p["c"] = txt;
  }
  if (h) {
    std::string txt;
    for (auto x : *h) txt += (txt.empty() ? "" : ",") + std::to_string(x);
    p["h"] = txt;
  }
  p["scalar_mode"] = scalar_mode.value_or("exact");
  for (const auto& [k, v] : tolerances) p["tolerance." + k] = fmt(v);
  return p;
}

} // namespace lvf
