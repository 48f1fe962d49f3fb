#ifndef ECHO2D_UNITS_HPP
#define ECHO2D_UNITS_HPP

#include <string>

namespace echo2d::units {

// Internal unit system: energies in meV, times in fs, angular frequencies
// in rad/fs, lengths in nm. "THz" always means ordinary frequency nu with
// omega = 2*pi*nu; 1 fs^-1 = 1000 THz.
inline constexpr double hbar_meV_fs = 658.2119;

double mev_to_radfs(double energy_meV);
double radfs_to_mev(double omega_radfs);
double thz_to_radfs(double nu_THz);
double radfs_to_thz(double omega_radfs);
double mev_to_thz(double energy_meV);
double thz_to_mev(double nu_THz);

// Converts between any two of {meV, THz, rad/fs}; throws on unknown unit.
double convert(double value, const std::string& from, const std::string& to);

// Fringe period of two beams of wavelength `wavelength_nm` crossing at
// `crossing_angle_rad`: Lambda = lambda / (2 sin(theta/2)).
double grating_period(double wavelength_nm, double crossing_angle_rad);

}  // namespace echo2d::units

#endif
