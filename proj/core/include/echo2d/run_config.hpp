#ifndef ECHO2D_RUN_CONFIG_HPP
#define ECHO2D_RUN_CONFIG_HPP

#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "echo2d/pathway.hpp"
#include "echo2d/spectra.hpp"
#include "echo2d/system.hpp"

namespace echo2d {

// Schema or semantic problem in a run configuration (CLI exit code 2).
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  // exactly one of the two system descriptions is populated
  std::optional<SiteDimerParams> site_dimer;
  std::optional<ExcitonSystem> explicit_system;
  std::vector<double> gamma_per_level;  // empty = all zero
  bool population_relaxation = false;

  ExperimentKind experiment = ExperimentKind::Rephasing;
  std::vector<double> tau2_list;  // tau1 values for two-quantum
  bool stick_mode = true;
  std::optional<FrequencyGridSpec> grid;
  std::set<std::string> outputs;  // real, imag, abs, sticks, pathways, diagrams, traces
  std::vector<std::pair<double, double>> trace_peaks;  // (omega1, omega3) rad/fs
  std::string output_dir = ".";

  // Builds the exciton system (with rates applied) described by the config.
  ExcitonSystem build_system() const;
};

// Parses and validates the JSON text of a config file. Every dimensional
// quantity must be unit-tagged: {"value": x, "unit": "meV"|"THz"|"rad/fs"}.
// Throws ConfigError with a field path on any schema violation.
RunConfig parse_run_config(const std::string& json_text);

RunConfig load_run_config(const std::string& path);

// Canonical re-serialization used for the metadata config hash.
std::string canonical_config_text(const RunConfig& cfg);

}  // namespace echo2d

#endif
