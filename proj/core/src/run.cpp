#include "echo2d/run.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>

#include <json.hpp>

#include "echo2d/dimer_oracle.hpp"
#include "echo2d/output.hpp"
#include "echo2d/response.hpp"
#include "echo2d/units.hpp"

namespace echo2d {

namespace {

using nlohmann::json;

std::string tau_tag(double t) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", t);
  std::string s = buf;
  for (auto& c : s)
    if (c == '.') c = 'p';
  return s;
}

json frequency_json(double omega_radfs) {
  return {{"rad_fs", omega_radfs},
          {"meV", units::radfs_to_mev(omega_radfs)},
          {"THz", units::radfs_to_thz(omega_radfs)}};
}

}  // namespace

std::vector<std::string> run(const RunConfig& cfg) {
  namespace fs = std::filesystem;
  const ExcitonSystem sys = cfg.build_system();
  const auto pathways = enumerate_pathways(sys, cfg.experiment);
  const auto amps = factor_pathways(sys, pathways);
  const std::string kind = to_string(cfg.experiment);
  const bool two_quantum = cfg.experiment == ExperimentKind::TwoQuantum;
  const char* fixed_delay = two_quantum ? "tau1" : "tau2";

  std::error_code ec;
  fs::create_directories(cfg.output_dir, ec);
  auto path = [&](const std::string& name) { return cfg.output_dir + "/" + name; };

  std::vector<std::string> manifest;
  json meta;
  meta["tool"] = "echo2d";
  meta["version"] = kVersion;
  meta["config_hash_fnv1a"] = config_hash(cfg);
  meta["experiment"] = kind;
  meta["n_pathways"] = pathways.size();
  meta["threads"] = grid_thread_count();
  // caption frequencies are read as ordinary frequencies (omega = 2 pi nu)
  meta["frequency_reading"] = "nu ordinary, omega = 2*pi*nu";
  meta["levels"] = json::array();
  for (int a = 0; a < sys.n_levels; ++a)
    meta["levels"].push_back({{"label", sys.label(a)},
                              {"band", sys.band[a]},
                              {"energy", frequency_json(sys.energies[a])},
                              {"gamma_per_fs", sys.gamma[a]}});
  if (cfg.site_dimer) {
    const auto rep = build_exciton_dimer(*cfg.site_dimer).second;
    meta["mixing"] = {{"theta_rad", rep.theta},
                      {"omega_bar", frequency_json(rep.omega_bar)},
                      {"delta", frequency_json(rep.delta)},
                      {"mu_alpha_g", rep.mu_alpha_g},
                      {"mu_beta_g", rep.mu_beta_g},
                      {"mu_f_alpha", rep.mu_f_alpha},
                      {"mu_f_beta", rep.mu_f_beta}};
  }

  try {
    if (cfg.outputs.count("pathways")) {
      const auto p = path(kind + "_pathways.json");
      write_pathways_json(p, sys, pathways);
      manifest.push_back(p);
    }
    if (cfg.outputs.count("diagrams")) {
      const auto p = path(kind + "_diagrams.txt");
      write_diagrams_text(p, sys, pathways);
      manifest.push_back(p);
    }

    for (double t : cfg.tau2_list) {
      const std::string tag = kind + "_" + fixed_delay + "_" + tau_tag(t);
      if (cfg.stick_mode) {
        if (cfg.outputs.count("sticks")) {
          const auto sticks =
              two_quantum ? stick_spectrum_two_quantum(amps, t) : stick_spectrum(amps, t);
          const auto p = path(tag + "_sticks.json");
          write_sticks_json(p, sticks, t);
          manifest.push_back(p);
        }
      } else {
        const auto grid = spectrum_grid(amps, *cfg.grid, t, cfg.experiment);
        for (Channel c : {Channel::Real, Channel::Imag, Channel::Abs}) {
          if (!cfg.outputs.count(to_string(c))) continue;
          const auto csv = path(tag + "_" + to_string(c) + ".csv");
          write_grid_csv(csv, grid, c);
          manifest.push_back(csv);
          const auto pgm = path(tag + "_" + to_string(c) + ".pgm");
          const auto [lo, hi] = write_grid_pgm(pgm, grid, c);
          manifest.push_back(pgm);
          meta["pgm_normalization"][tag + "_" + to_string(c)] = {{"min", lo}, {"max", hi}};
        }
      }
    }

    if (cfg.outputs.count("traces") && !cfg.trace_peaks.empty()) {
      std::vector<std::vector<std::complex<double>>> traces;
      for (const auto& [w1, w3] : cfg.trace_peaks)
        traces.push_back(waiting_time_trace(amps, w1, w3, cfg.tau2_list, !cfg.stick_mode));
      const auto p = path(kind + "_traces.csv");
      write_trace_csv(p, cfg.tau2_list, traces);
      manifest.push_back(p);
      meta["trace_peaks"] = cfg.trace_peaks;
    }
  } catch (const std::domain_error& e) {
    // Gamma/grid mode mismatch: a configuration problem, reported verbatim
    throw ConfigError(std::string("config error: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("config error: ") + e.what());
  }

  meta["files"] = manifest;
  const auto mp = path("metadata.json");
  std::ofstream out(mp);
  if (!out) throw std::runtime_error("cannot write " + mp);
  out << meta.dump(2) << '\n';
  manifest.insert(manifest.begin(), mp);
  return manifest;
}

}  // namespace echo2d
