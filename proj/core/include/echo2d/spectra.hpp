#ifndef ECHO2D_SPECTRA_HPP
#define ECHO2D_SPECTRA_HPP

#include <complex>
#include <vector>

#include "echo2d/response.hpp"

namespace echo2d {

enum class AxisPair { Omega1_Omega3, Omega2_Omega3 };

struct FrequencyGridSpec {
  double omega_min = 0.0;  // rad/fs, both axes
  double omega_max = 0.0;
  int n_points = 0;        // per axis
  AxisPair axes = AxisPair::Omega1_Omega3;

  double axis_value(int i) const {
    return omega_min + (omega_max - omega_min) * i / (n_points - 1);
  }
  void validate() const;  // throws std::invalid_argument
};

enum class SpectrumKind { Rephasing, NonRephasing, TwoQuantum, FullFourier };
std::string to_string(SpectrumKind kind);
SpectrumKind spectrum_kind(ExperimentKind kind);

// E(omega_row, omega_col) on a square grid; row axis is omega1 (omega2 for
// two-quantum), column axis omega3.
struct SpectrumGrid {
  FrequencyGridSpec spec;
  double tau_fixed = 0.0;  // tau2, or tau1 for two-quantum
  std::vector<std::complex<double>> values;  // row-major n_points x n_points
  SpectrumKind kind = SpectrumKind::Rephasing;

  std::complex<double>& at(int row, int col) { return values[row * spec.n_points + col]; }
  std::complex<double> at(int row, int col) const { return values[row * spec.n_points + col]; }
};

// One delta peak of the Gamma = 0 spectrum. Several peaks may share a 2D
// position (omega1, omega3) when distinct tau2-frequencies contribute there.
struct StickPeak {
  double omega1 = 0.0;  // rad/fs (omega2 for two-quantum)
  double omega3 = 0.0;
  std::complex<double> amp0;    // class amplitude at the requested tau2
  std::complex<double> Omega2;  // tau2 frequency of this component
};

struct StickSpectrum {
  std::vector<StickPeak> peaks;
  int n_positions() const;  // distinct (omega1, omega3) classes
};

// Delta-peak spectrum: pathways grouped by (Re Omega1, Re Omega3, Omega2)
// rounded to 1e-9 rad/fs, amplitudes summed and multiplied by e^{-i Omega2
// tau2}; exact-zero classes pruned. Peaks land at omega1 = Re Omega1, which
// is negative for rephasing per the e^{+i omega1 tau1} transform convention.
// Throws std::domain_error if any transformed interval carries Gamma != 0.
StickSpectrum stick_spectrum(const std::vector<PathwayAmplitude>& amps, double tau2);

// As above but transforming (tau2, tau3) at fixed tau1 (two-quantum layout).
StickSpectrum stick_spectrum_two_quantum(const std::vector<PathwayAmplitude>& amps, double tau1);

// Broadened spectrum via the analytic half-sided transform: each pathway
// contributes amp * e^{-i Omega2 tau2} * L(omega1; Omega1) * L(omega3;
// Omega3) with L(omega; Omega) = i/(omega - Omega); a complex Lorentzian of
// HWHM -Im Omega. For TwoQuantum the transform runs over (tau2, tau3) at
// fixed tau1. Requires Gamma > 0 on the transformed intervals (throws
// std::domain_error otherwise). Rows are evaluated in parallel, capped by
// ECHO2D_THREADS; the result is byte-identical for any worker count.
SpectrumGrid spectrum_grid(const std::vector<PathwayAmplitude>& amps,
                           const FrequencyGridSpec& spec, double tau_fixed, ExperimentKind kind);

// Validation-only quadrature route: trapezoidal e^{+i omega tau} transforms
// of signal_time_domain over [0, t_max] with n_time samples per axis.
SpectrumGrid spectrum_grid_quadrature(const std::vector<PathwayAmplitude>& amps,
                                      const FrequencyGridSpec& spec, double tau_fixed,
                                      ExperimentKind kind, double t_max, int n_time);

// Pointwise sum after flipping the rephasing grid's omega1 axis into the
// (+,+) quadrant. Requires reph.spec.omega_min == -nonreph.spec.omega_max
// (mirrored row axes) and equal n_points; throws std::invalid_argument.
SpectrumGrid full_fourier(const SpectrumGrid& reph, const SpectrumGrid& nonreph);

// Peak amplitude versus waiting time: the stick-class sum at the (omega1,
// omega3) position nearest the request (within 1e-6 rad/fs; throws
// std::invalid_argument if none), or the broadened-grid value at exactly
// (omega1, omega3) when broadened = true.
std::vector<std::complex<double>> waiting_time_trace(const std::vector<PathwayAmplitude>& amps,
                                                     double omega1, double omega3,
                                                     const std::vector<double>& tau2_grid,
                                                     bool broadened = false);

// Worker count used for grid rows: hardware concurrency capped by the
// ECHO2D_THREADS environment variable (values < 1 mean 1).
int grid_thread_count();

}  // namespace echo2d

#endif
