#include "echo2d/system.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "echo2d/units.hpp"

namespace echo2d {

void ExcitonSystem::validate() const {
  const int n = n_levels;
  if (n < 2) throw std::invalid_argument("ExcitonSystem: need at least two levels");
  if ((int)energies.size() != n || (int)gamma.size() != n || (int)band.size() != n ||
      (int)labels.size() != n || (int)Gamma.size() != n * n || (int)mu_plus.size() != n * n)
    throw std::invalid_argument("ExcitonSystem: inconsistent array sizes");
  if (ground_index < 0 || ground_index >= n)
    throw std::invalid_argument("ExcitonSystem: ground_index out of range");
  if (energies[ground_index] != 0.0)
    throw std::invalid_argument("ExcitonSystem: ground energy must be zero");
  for (int a = 0; a < n; ++a) {
    if (!std::isfinite(energies[a]) || !std::isfinite(gamma[a]) || gamma[a] < 0.0)
      throw std::invalid_argument("ExcitonSystem: non-finite energy or negative width");
    if (band[a] < 0 || band[a] > 2)
      throw std::invalid_argument("ExcitonSystem: band must be 0, 1 or 2");
    for (int b = 0; b < n; ++b) {
      const double m = mu_plus[a * n + b];
      if (!std::isfinite(m)) throw std::invalid_argument("ExcitonSystem: non-finite dipole");
      if (m != 0.0 && band[a] != band[b] + 1)
        throw std::invalid_argument("ExcitonSystem: mu_plus entry off the raising band ladder");
      const double G = Gamma[a * n + b];
      if (!std::isfinite(G) || G < 0.0)
        throw std::invalid_argument("ExcitonSystem: Gamma entries must be finite and >= 0");
      if (G != Gamma[b * n + a])
        throw std::invalid_argument("ExcitonSystem: Gamma must be symmetric");
    }
  }
}

std::pair<ExcitonSystem, MixingAngleReport> build_exciton_dimer(const SiteDimerParams& p) {
  if (!std::isfinite(p.omega_a) || !std::isfinite(p.omega_b) || !std::isfinite(p.coupling_meV) ||
      !std::isfinite(p.mu_a) || !std::isfinite(p.mu_b) || !std::isfinite(p.biexciton_shift_meV))
    throw std::invalid_argument("build_exciton_dimer: non-finite parameter");
  if (p.omega_b < p.omega_a)
    throw std::invalid_argument("build_exciton_dimer: requires omega_b >= omega_a");

  const double j = p.coupling_meV / units::hbar_meV_fs;  // J/hbar, rad/fs
  MixingAngleReport rep;
  rep.omega_bar = 0.5 * (p.omega_a + p.omega_b);
  rep.delta = 0.5 * (p.omega_a - p.omega_b);  // <= 0
  if (rep.delta == 0.0) {
    // arctan(inf)/2 limit; alpha = (|e_a g_b> + |g_a e_b>)/sqrt(2) sits at wbar + J/hbar
    rep.theta = std::numbers::pi / 4.0;
    rep.omega_alpha = rep.omega_bar + j;
    rep.omega_beta = rep.omega_bar - j;
  } else {
    rep.theta = std::atan(j / rep.delta) / 2.0;
    const double s = std::copysign(std::hypot(rep.delta, j), rep.delta);
    rep.omega_alpha = rep.omega_bar + s;  // delta < 0 puts alpha below beta
    rep.omega_beta = rep.omega_bar - s;
  }
  const double c = std::cos(rep.theta), s = std::sin(rep.theta);
  rep.mu_alpha_g = c * p.mu_a + s * p.mu_b;
  rep.mu_beta_g = -s * p.mu_a + c * p.mu_b;
  rep.mu_f_alpha = s * p.mu_a + c * p.mu_b;
  rep.mu_f_beta = c * p.mu_a - s * p.mu_b;

  const double w_f = p.omega_a + p.omega_b - p.biexciton_shift_meV / units::hbar_meV_fs;

  ExcitonSystem sys;
  sys.n_levels = 4;
  sys.energies = {0.0, rep.omega_alpha, rep.omega_beta, w_f};
  sys.gamma.assign(4, 0.0);
  sys.Gamma.assign(16, 0.0);
  sys.mu_plus.assign(16, 0.0);
  sys.band = {0, 1, 1, 2};
  sys.ground_index = 0;
  sys.labels = {"g", "alpha", "beta", "f"};
  sys.mu_plus[1 * 4 + 0] = rep.mu_alpha_g;
  sys.mu_plus[2 * 4 + 0] = rep.mu_beta_g;
  sys.mu_plus[3 * 4 + 1] = rep.mu_f_alpha;
  sys.mu_plus[3 * 4 + 2] = rep.mu_f_beta;
  sys.validate();
  return {sys, rep};
}

ExcitonSystem set_rates(const ExcitonSystem& sys, const std::vector<double>& gamma_per_level,
                        bool population_relaxation) {
  const int n = sys.n_levels;
  if ((int)gamma_per_level.size() != n)
    throw std::invalid_argument("set_rates: need one rate per level");
  for (double g : gamma_per_level)
    if (!(g >= 0.0) || !std::isfinite(g))
      throw std::invalid_argument("set_rates: rates must be finite and >= 0");
  ExcitonSystem out = sys;
  out.gamma = gamma_per_level;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      out.Gamma[a * n + b] = (a == b) ? (population_relaxation ? 2.0 * gamma_per_level[a] : 0.0)
                                      : gamma_per_level[a] + gamma_per_level[b];
  out.validate();
  return out;
}

std::complex<double> interval_frequency(const ExcitonSystem& sys, int ket, int bra) {
  return {sys.energies[ket] - sys.energies[bra], -sys.rate(ket, bra)};
}

}  // namespace echo2d
