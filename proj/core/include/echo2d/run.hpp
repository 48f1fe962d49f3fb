#ifndef ECHO2D_RUN_HPP
#define ECHO2D_RUN_HPP

#include <string>
#include <vector>

#include "echo2d/run_config.hpp"

namespace echo2d {

// Executes a run configuration and returns the paths of all written files
// (metadata.json first). Deterministic: identical configs produce
// byte-identical outputs regardless of worker count. Throws ConfigError for
// schema/mode problems and std::runtime_error for unwritable paths.
std::vector<std::string> run(const RunConfig& cfg);

}  // namespace echo2d

#endif
