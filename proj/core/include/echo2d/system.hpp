#ifndef ECHO2D_SYSTEM_HPP
#define ECHO2D_SYSTEM_HPP

#include <complex>
#include <string>
#include <utility>
#include <vector>

namespace echo2d {

// Site-basis description of two coupled two-level systems.
struct SiteDimerParams {
  double omega_a = 0.0;          // rad/fs, omega_b >= omega_a
  double omega_b = 0.0;          // rad/fs
  double coupling_meV = 0.0;     // J
  double mu_a = 0.0;             // transition dipoles, arbitrary real units
  double mu_b = 0.0;
  double biexciton_shift_meV = 0.0;  // subtracted from hbar*omega_f
};

// N-level band-structured system in its eigenbasis. Immutable after
// construction; set_rates returns a modified copy.
struct ExcitonSystem {
  int n_levels = 0;
  std::vector<double> energies;   // rad/fs, energies[ground_index] == 0
  std::vector<double> gamma;      // per-level ad-hoc width, 1/fs
  std::vector<double> Gamma;      // n x n row-major, 1/fs
  std::vector<double> mu_plus;    // n x n row-major, mu_plus[a][b] != 0 only if band[a] == band[b]+1
  std::vector<int> band;          // excitation number per level (0, 1 or 2)
  int ground_index = 0;
  std::vector<std::string> labels;

  double omega(int level) const { return energies[level]; }
  double rate(int ket, int bra) const { return Gamma[ket * n_levels + bra]; }
  double dipole_raising(int upper, int lower) const { return mu_plus[upper * n_levels + lower]; }
  const std::string& label(int level) const { return labels[level]; }

  // Throws std::invalid_argument if any structural invariant is violated.
  void validate() const;
};

struct MixingAngleReport {
  double omega_bar = 0.0;   // (omega_a + omega_b)/2
  double delta = 0.0;       // (omega_a - omega_b)/2  (<= 0)
  double theta = 0.0;       // arctan(J / (hbar*delta)) / 2; pi/4 when delta == 0
  double omega_alpha = 0.0;
  double omega_beta = 0.0;
  double mu_alpha_g = 0.0;
  double mu_beta_g = 0.0;
  double mu_f_alpha = 0.0;
  double mu_f_beta = 0.0;
};

// Diagonalizes the single-exciton block and assembles the 4-level system
// {g, alpha, beta, f}. Gamma starts all-zero; call set_rates afterwards.
std::pair<ExcitonSystem, MixingAngleReport> build_exciton_dimer(const SiteDimerParams& params);

// Gamma[a][b] = gamma_a + gamma_b for a != b; Gamma[a][a] = 2*gamma_a, or 0
// when population relaxation is disabled.
ExcitonSystem set_rates(const ExcitonSystem& sys, const std::vector<double>& gamma_per_level,
                        bool population_relaxation = true);

// Complex frequency of the element |ket><bra|: Omega = (w_ket - w_bra) - i*Gamma[ket][bra].
// The element evolves as exp(-i*Omega*tau).
std::complex<double> interval_frequency(const ExcitonSystem& sys, int ket, int bra);

}  // namespace echo2d

#endif
