#ifndef ECHO2D_RESPONSE_HPP
#define ECHO2D_RESPONSE_HPP

#include <array>
#include <complex>
#include <vector>

#include "echo2d/pathway.hpp"
#include "echo2d/system.hpp"

namespace echo2d {

// Per-pulse complex constant E_j e^{-i wbar_j T_j}; E- uses the conjugate.
// Defaults to (1,1,1): carrier phases absorbed into the arbitrary units.
struct FieldSet {
  std::array<std::complex<double>, 3> pulse{{1.0, 1.0, 1.0}};
};

// Fully factored response term: amp * e^{-i Omega1 tau1} e^{-i Omega2 tau2}
// e^{-i Omega3 tau3}. For the conjugate (rephasing) branch the Omegas are
// already reflected (Omega -> -conj(Omega)) and amp carries the branch sign,
// so every term is evaluated uniformly.
struct PathwayAmplitude {
  std::complex<double> amp;
  std::complex<double> Omega1, Omega2, Omega3;
  bool is_conjugate_branch = false;
};

PathwayAmplitude factor_pathway(const ExcitonSystem& sys, const Pathway& p,
                                const FieldSet& fields = {});

std::vector<PathwayAmplitude> factor_pathways(const ExcitonSystem& sys,
                                              const std::vector<Pathway>& ps,
                                              const FieldSet& fields = {});

// Sum of all terms at (tau1, tau2, tau3); zero outside the Heaviside domain.
std::complex<double> signal_time_domain(const std::vector<PathwayAmplitude>& amps, double tau1,
                                        double tau2, double tau3);

// Enumeration-free reference: evaluates the surviving F_r trace terms by
// dense matrix products, propagating each interval element-wise with
// X_ab <- X_ab * exp(-i(w_a - w_b)tau - Gamma_ab tau). This equals the
// product of diagonal propagators Lambda X Lambda^dagger whenever
// Gamma_ab = gamma_a + gamma_b, and stays valid for general rate matrices.
std::complex<double> dense_oracle(const ExcitonSystem& sys, ExperimentKind kind, double tau1,
                                  double tau2, double tau3, const FieldSet& fields = {});

}  // namespace echo2d

#endif
