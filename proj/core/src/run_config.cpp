#include "echo2d/run_config.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "echo2d/units.hpp"

namespace echo2d {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw ConfigError("config error at " + where + ": " + what);
}

// {"value": x, "unit": "..."} -> rad/fs
double tagged_frequency(const json& j, const std::string& where) {
  if (!j.is_object() || !j.contains("value") || !j.contains("unit"))
    fail(where, "expected {\"value\": number, \"unit\": \"meV\"|\"THz\"|\"rad/fs\"}");
  if (!j["value"].is_number()) fail(where + ".value", "expected a number");
  if (!j["unit"].is_string()) fail(where + ".unit", "expected a string");
  try {
    return units::convert(j["value"].get<double>(), j["unit"].get<std::string>(), "rad/fs");
  } catch (const std::invalid_argument& e) {
    fail(where + ".unit", e.what());
  }
}

double plain_number(const json& j, const std::string& where) {
  if (!j.is_number()) fail(where, "expected a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) fail(where, "must be finite");
  return v;
}

std::vector<double> number_list(const json& j, const std::string& where) {
  if (!j.is_array()) fail(where, "expected an array of numbers");
  std::vector<double> out;
  for (size_t i = 0; i < j.size(); ++i)
    out.push_back(plain_number(j[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

SiteDimerParams parse_site_dimer(const json& j) {
  SiteDimerParams p;
  for (const char* key : {"omega_a", "omega_b", "coupling", "mu_a", "mu_b"})
    if (!j.contains(key)) fail(std::string("system.site_dimer.") + key, "missing");
  p.omega_a = tagged_frequency(j["omega_a"], "system.site_dimer.omega_a");
  p.omega_b = tagged_frequency(j["omega_b"], "system.site_dimer.omega_b");
  p.coupling_meV =
      units::radfs_to_mev(tagged_frequency(j["coupling"], "system.site_dimer.coupling"));
  p.mu_a = plain_number(j["mu_a"], "system.site_dimer.mu_a");
  p.mu_b = plain_number(j["mu_b"], "system.site_dimer.mu_b");
  if (j.contains("biexciton_shift"))
    p.biexciton_shift_meV = units::radfs_to_mev(
        tagged_frequency(j["biexciton_shift"], "system.site_dimer.biexciton_shift"));
  if (p.omega_b < p.omega_a) fail("system.site_dimer", "requires omega_b >= omega_a");
  return p;
}

ExcitonSystem parse_explicit(const json& j) {
  ExcitonSystem s;
  if (!j.contains("energies") || !j["energies"].is_array())
    fail("system.explicit.energies", "expected an array of tagged frequencies");
  for (size_t i = 0; i < j["energies"].size(); ++i)
    s.energies.push_back(
        tagged_frequency(j["energies"][i], "system.explicit.energies[" + std::to_string(i) + "]"));
  s.n_levels = (int)s.energies.size();
  const int n = s.n_levels;
  if (!j.contains("band")) fail("system.explicit.band", "missing");
  for (double v : number_list(j["band"], "system.explicit.band")) s.band.push_back((int)v);
  if (!j.contains("mu_plus") || !j["mu_plus"].is_array() || (int)j["mu_plus"].size() != n)
    fail("system.explicit.mu_plus", "expected an n x n array");
  for (int a = 0; a < n; ++a) {
    const auto row = number_list(j["mu_plus"][a], "system.explicit.mu_plus[" + std::to_string(a) + "]");
    if ((int)row.size() != n) fail("system.explicit.mu_plus", "expected an n x n array");
    s.mu_plus.insert(s.mu_plus.end(), row.begin(), row.end());
  }
  s.Gamma.assign((size_t)n * n, 0.0);
  s.gamma.assign(n, 0.0);
  if (j.contains("labels")) {
    if (!j["labels"].is_array() || (int)j["labels"].size() != n)
      fail("system.explicit.labels", "expected one label per level");
    for (const auto& l : j["labels"]) s.labels.push_back(l.get<std::string>());
  } else {
    for (int a = 0; a < n; ++a) s.labels.push_back("L" + std::to_string(a));
  }
  if (j.contains("ground_index")) s.ground_index = (int)plain_number(j["ground_index"], "system.explicit.ground_index");
  try {
    s.validate();
  } catch (const std::invalid_argument& e) {
    fail("system.explicit", e.what());
  }
  return s;
}

}  // namespace

ExcitonSystem RunConfig::build_system() const {
  ExcitonSystem sys = site_dimer ? build_exciton_dimer(*site_dimer).first : *explicit_system;
  if (!gamma_per_level.empty()) sys = set_rates(sys, gamma_per_level, population_relaxation);
  return sys;
}

RunConfig parse_run_config(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config error: invalid JSON: ") + e.what());
  }
  RunConfig cfg;

  if (!j.contains("system") || !j["system"].is_object()) fail("system", "missing object");
  const auto& sys = j["system"];
  if (sys.contains("site_dimer") == sys.contains("explicit"))
    fail("system", "expected exactly one of site_dimer / explicit");
  if (sys.contains("site_dimer"))
    cfg.site_dimer = parse_site_dimer(sys["site_dimer"]);
  else
    cfg.explicit_system = parse_explicit(sys["explicit"]);
  if (sys.contains("gamma")) {
    cfg.gamma_per_level = number_list(sys["gamma"], "system.gamma");
    for (double g : cfg.gamma_per_level)
      if (g < 0.0) fail("system.gamma", "rates must be >= 0");
  }
  if (sys.contains("population_relaxation")) {
    if (!sys["population_relaxation"].is_boolean())
      fail("system.population_relaxation", "expected a boolean");
    cfg.population_relaxation = sys["population_relaxation"].get<bool>();
  }

  if (!j.contains("experiment") || !j["experiment"].is_string())
    fail("experiment", "expected rephasing | nonrephasing | two-quantum");
  try {
    cfg.experiment = experiment_kind_from_string(j["experiment"].get<std::string>());
  } catch (const std::invalid_argument& e) {
    fail("experiment", e.what());
  }

  if (j.contains("tau2")) {
    const auto& t = j["tau2"];
    if (t.is_array()) {
      cfg.tau2_list = number_list(t, "tau2");
    } else if (t.is_object() && t.contains("start") && t.contains("stop") && t.contains("step")) {
      const double a = plain_number(t["start"], "tau2.start");
      const double b = plain_number(t["stop"], "tau2.stop");
      const double d = plain_number(t["step"], "tau2.step");
      if (d <= 0.0 || b < a) fail("tau2", "requires step > 0 and stop >= start");
      for (double x = a; x <= b + 1e-9; x += d) cfg.tau2_list.push_back(x);
    } else {
      fail("tau2", "expected an array or {start, stop, step} (fs)");
    }
    for (double x : cfg.tau2_list)
      if (x < 0.0) fail("tau2", "delays must be >= 0");
  } else {
    cfg.tau2_list = {0.0};
  }

  if (j.contains("grid")) {
    if (j["grid"].is_string() && j["grid"] == "stick") {
      cfg.stick_mode = true;
    } else if (j["grid"].is_object()) {
      const auto& gj = j["grid"];
      FrequencyGridSpec g;
      if (!gj.contains("omega_min") || !gj.contains("omega_max") || !gj.contains("n_points"))
        fail("grid", "expected omega_min, omega_max (tagged), n_points");
      g.omega_min = tagged_frequency(gj["omega_min"], "grid.omega_min");
      g.omega_max = tagged_frequency(gj["omega_max"], "grid.omega_max");
      if (!gj["n_points"].is_number_integer() || gj["n_points"].get<int>() < 2)
        fail("grid.n_points", "expected an integer >= 2");
      g.n_points = gj["n_points"].get<int>();
      try {
        g.validate();
      } catch (const std::invalid_argument& e) {
        fail("grid", e.what());
      }
      cfg.grid = g;
      cfg.stick_mode = false;
    } else {
      fail("grid", "expected \"stick\" or a grid object");
    }
  }

  if (j.contains("outputs")) {
    if (!j["outputs"].is_array()) fail("outputs", "expected an array of strings");
    for (const auto& o : j["outputs"]) {
      const std::string name = o.get<std::string>();
      static const std::set<std::string> known{"real",     "imag",     "abs",   "sticks",
                                               "pathways", "diagrams", "traces"};
      if (!known.count(name)) fail("outputs", "unknown output: " + name);
      cfg.outputs.insert(name);
    }
  } else {
    cfg.outputs = cfg.stick_mode ? std::set<std::string>{"sticks"}
                                 : std::set<std::string>{"real", "imag", "abs"};
  }

  if (j.contains("trace_peaks")) {
    if (!j["trace_peaks"].is_array()) fail("trace_peaks", "expected an array of [omega1, omega3]");
    for (size_t i = 0; i < j["trace_peaks"].size(); ++i) {
      const auto& pk = j["trace_peaks"][i];
      const std::string where = "trace_peaks[" + std::to_string(i) + "]";
      if (!pk.is_array() || pk.size() != 2) fail(where, "expected [omega1, omega3]");
      cfg.trace_peaks.emplace_back(tagged_frequency(pk[0], where + "[0]"),
                                   tagged_frequency(pk[1], where + "[1]"));
    }
  }

  if (j.contains("output_dir")) {
    if (!j["output_dir"].is_string()) fail("output_dir", "expected a string");
    cfg.output_dir = j["output_dir"].get<std::string>();
  }
  return cfg;
}

RunConfig load_run_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config error: cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_run_config(ss.str());
}

std::string canonical_config_text(const RunConfig& cfg) {
  json j;
  if (cfg.site_dimer) {
    const auto& p = *cfg.site_dimer;
    j["system"]["site_dimer"] = {{"omega_a", p.omega_a},
                                 {"omega_b", p.omega_b},
                                 {"coupling_meV", p.coupling_meV},
                                 {"mu_a", p.mu_a},
                                 {"mu_b", p.mu_b},
                                 {"biexciton_shift_meV", p.biexciton_shift_meV}};
  } else {
    const auto& s = *cfg.explicit_system;
    j["system"]["explicit"] = {{"energies", s.energies}, {"band", s.band},
                               {"mu_plus", s.mu_plus},   {"labels", s.labels},
                               {"ground_index", s.ground_index}};
  }
  j["system"]["gamma"] = cfg.gamma_per_level;
  j["system"]["population_relaxation"] = cfg.population_relaxation;
  j["experiment"] = to_string(cfg.experiment);
  j["tau2"] = cfg.tau2_list;
  if (cfg.grid)
    j["grid"] = {{"omega_min", cfg.grid->omega_min},
                 {"omega_max", cfg.grid->omega_max},
                 {"n_points", cfg.grid->n_points}};
  else
    j["grid"] = "stick";
  j["outputs"] = cfg.outputs;
  j["trace_peaks"] = cfg.trace_peaks;
  j["output_dir"] = cfg.output_dir;
  return j.dump();
}

}  // namespace echo2d
