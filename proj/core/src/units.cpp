#include "echo2d/units.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace echo2d::units {

namespace {
constexpr double two_pi = 2.0 * std::numbers::pi;
}

double mev_to_radfs(double energy_meV) { return energy_meV / hbar_meV_fs; }
double radfs_to_mev(double omega_radfs) { return omega_radfs * hbar_meV_fs; }

double thz_to_radfs(double nu_THz) { return two_pi * nu_THz * 1e-3; }
double radfs_to_thz(double omega_radfs) { return omega_radfs / two_pi * 1e3; }

double mev_to_thz(double energy_meV) { return radfs_to_thz(mev_to_radfs(energy_meV)); }
double thz_to_mev(double nu_THz) { return radfs_to_mev(thz_to_radfs(nu_THz)); }

double convert(double value, const std::string& from, const std::string& to) {
  double omega;
  if (from == "meV") omega = mev_to_radfs(value);
  else if (from == "THz") omega = thz_to_radfs(value);
  else if (from == "rad/fs") omega = value;
  else throw std::invalid_argument("unknown unit: " + from);

  if (to == "meV") return radfs_to_mev(omega);
  if (to == "THz") return radfs_to_thz(omega);
  if (to == "rad/fs") return omega;
  throw std::invalid_argument("unknown unit: " + to);
}

double grating_period(double wavelength_nm, double crossing_angle_rad) {
  if (!(wavelength_nm > 0.0))
    throw std::invalid_argument("grating_period: wavelength must be positive");
  if (!(crossing_angle_rad > 0.0) || crossing_angle_rad > std::numbers::pi)
    throw std::invalid_argument("grating_period: crossing angle must lie in (0, pi]");
  return wavelength_nm / (2.0 * std::sin(crossing_angle_rad / 2.0));
}

}  // namespace echo2d::units
