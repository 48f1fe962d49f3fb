#ifndef ECHO2D_OUTPUT_HPP
#define ECHO2D_OUTPUT_HPP

#include <string>
#include <vector>

#include "echo2d/diagram.hpp"
#include "echo2d/pathway.hpp"
#include "echo2d/run_config.hpp"
#include "echo2d/spectra.hpp"

namespace echo2d {

// Scalar channel of a complex grid value.
enum class Channel { Real, Imag, Abs };
std::string to_string(Channel c);
double channel_value(std::complex<double> v, Channel c);

// CSV: first row is the column (omega3) axis, first column the row axis;
// values printed with %.17g so a read-back reproduces them exactly.
void write_grid_csv(const std::string& path, const SpectrumGrid& grid, Channel c);

// 16-bit big-endian P5 heatmap, min-max normalized; the normalization
// interval is returned so callers can record it in run metadata.
std::pair<double, double> write_grid_pgm(const std::string& path, const SpectrumGrid& grid,
                                         Channel c);

void write_sticks_json(const std::string& path, const StickSpectrum& sticks, double tau_fixed);

void write_pathways_json(const std::string& path, const ExcitonSystem& sys,
                         const std::vector<Pathway>& pathways);

void write_diagrams_text(const std::string& path, const ExcitonSystem& sys,
                         const std::vector<Pathway>& pathways);

// trace CSV: tau2 column plus real/imag/abs columns per requested peak
void write_trace_csv(const std::string& path, const std::vector<double>& tau2,
                     const std::vector<std::vector<std::complex<double>>>& traces);

// JSON serialization of one pathway (shared by files and the CLI).
std::string pathway_json(const ExcitonSystem& sys, const Pathway& p);

// FNV-1a hash of the canonical config text, as a hex string.
std::string config_hash(const RunConfig& cfg);

// tool version string recorded in metadata
extern const char* const kVersion;

}  // namespace echo2d

#endif
