#ifndef ECHO2D_DIMER_ORACLE_HPP
#define ECHO2D_DIMER_ORACLE_HPP

#include <complex>
#include <vector>

#include "echo2d/system.hpp"

namespace echo2d {

// One term of the closed-form heterodimer spectra: prefactor * e^{-i
// tau2_phase tau2} * L(omega1; omega1_pole) * L(omega3; omega3_pole), with
// the same half-sided kernel L(w; W) = i/(w - W) the grid assembler uses.
struct AnalyticSpectrumTerm {
  std::complex<double> prefactor;
  std::complex<double> tau2_phase;   // complex frequency of the waiting-time factor
  std::complex<double> omega1_pole;  // already reflected for the rephasing branch
  std::complex<double> omega3_pole;
};

// Term lists transcribed from the dephasing-inclusive closed forms for the
// 4-level dimer {g, alpha, beta, f}; 12 terms each. The system must come
// from build_exciton_dimer (or share its level layout).
std::vector<AnalyticSpectrumTerm> analytic_terms_rephasing(const ExcitonSystem& sys);
std::vector<AnalyticSpectrumTerm> analytic_terms_nonrephasing(const ExcitonSystem& sys);

// Broadened-spectrum values at one grid point (Gamma > 0).
std::complex<double> analytic_rephasing(const ExcitonSystem& sys, double omega1, double tau2,
                                        double omega3);
std::complex<double> analytic_nonrephasing(const ExcitonSystem& sys, double omega1, double tau2,
                                           double omega3);

// Time-domain values of the same expressions (valid for any Gamma,
// interior delays tau_k > 0; the Heaviside step is the caller's business).
std::complex<double> analytic_rephasing_time(const ExcitonSystem& sys, double tau1, double tau2,
                                             double tau3);
std::complex<double> analytic_nonrephasing_time(const ExcitonSystem& sys, double tau1,
                                                double tau2, double tau3);

// Gamma = 0 two-quantum signal at tau1 = 0: two sticks at (omega_f,
// omega_alpha) and (omega_f, omega_beta) with prefactors +-(mu_ag mu_fa +
// mu_bg mu_fb)(mu_ag mu_fa - mu_bg mu_fb). Pointwise query returns the stick
// amplitude when (omega2, omega3) lies within 1e-9 rad/fs of a stick, else 0.
std::complex<double> analytic_two_quantum(const ExcitonSystem& sys, double omega2, double omega3);

// Time-domain Gamma = 0 two-quantum signal at tau1 = 0.
std::complex<double> analytic_two_quantum_time(const ExcitonSystem& sys, double tau2,
                                               double tau3);

}  // namespace echo2d

#endif
