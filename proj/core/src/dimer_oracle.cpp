#include "echo2d/dimer_oracle.hpp"

#include <cmath>
#include <stdexcept>

namespace echo2d {

namespace {

constexpr std::complex<double> kI(0.0, 1.0);
enum : int { g = 0, a = 1, b = 2, f = 3 };

struct Dimer {
  double mag, mbg, mfa, mfb;
  const ExcitonSystem* sys;
  std::complex<double> O(int i, int j) const {
    return {sys->energies[i] - sys->energies[j], -sys->rate(i, j)};
  }
  // rephasing interval-1 pole: the reflected coherence frequency
  std::complex<double> p1(int i) const { return -std::conj(O(i, g)); }
};

Dimer unpack(const ExcitonSystem& sys) {
  if (sys.n_levels != 4 || sys.band != std::vector<int>{0, 1, 1, 2})
    throw std::invalid_argument("dimer oracle: expects the 4-level {g, alpha, beta, f} layout");
  return {sys.dipole_raising(a, g), sys.dipole_raising(b, g), sys.dipole_raising(f, a),
          sys.dipole_raising(f, b), &sys};
}

std::complex<double> L(double w, std::complex<double> W) { return kI / (w - W); }

std::complex<double> eval_grid(const std::vector<AnalyticSpectrumTerm>& terms, double w1,
                               double t2, double w3) {
  std::complex<double> tot = 0.0;
  for (const auto& t : terms)
    tot += t.prefactor * std::exp(-kI * t.tau2_phase * t2) * L(w1, t.omega1_pole) *
           L(w3, t.omega3_pole);
  return tot;
}

std::complex<double> eval_time(const std::vector<AnalyticSpectrumTerm>& terms, double t1,
                               double t2, double t3) {
  std::complex<double> tot = 0.0;
  for (const auto& t : terms)
    tot += t.prefactor *
           std::exp(-kI * (t.omega1_pole * t1 + t.tau2_phase * t2 + t.omega3_pole * t3));
  return tot;
}

}  // namespace

std::vector<AnalyticSpectrumTerm> analytic_terms_rephasing(const ExcitonSystem& sys) {
  const Dimer d = unpack(sys);
  const double mag = d.mag, mbg = d.mbg, mfa = d.mfa, mfb = d.mfb;
  auto O = [&](int i, int j) { return d.O(i, j); };
  const std::complex<double> Oba_r = -std::conj(O(b, a));  // e^{+i conj(Omega_ba) tau2}
  return {
      // alpha diagonal: GSB + SE
      {std::pow(mag, 4), O(g, g), d.p1(a), O(a, g)},
      {std::pow(mag, 4), O(a, a), d.p1(a), O(a, g)},
      // beta diagonal: GSB + SE
      {std::pow(mbg, 4), O(g, g), d.p1(b), O(b, g)},
      {std::pow(mbg, 4), O(b, b), d.p1(b), O(b, g)},
      // ESA out of the alpha column
      {-mag * mag * mfa * mfa, O(a, a), d.p1(a), O(f, a)},
      {-mag * mbg * mfa * mfb, O(b, a), d.p1(a), O(f, a)},
      // upper cross peak: GSB + coherence
      {mag * mag * mbg * mbg, O(g, g), d.p1(a), O(b, g)},
      {mag * mag * mbg * mbg, O(b, a), d.p1(a), O(b, g)},
      // ESA out of the beta column
      {-mbg * mbg * mfb * mfb, O(b, b), d.p1(b), O(f, b)},
      {-mag * mbg * mfa * mfb, Oba_r, d.p1(b), O(f, b)},
      // lower cross peak: GSB + coherence
      {mag * mag * mbg * mbg, O(g, g), d.p1(b), O(a, g)},
      {mag * mag * mbg * mbg, Oba_r, d.p1(b), O(a, g)},
  };
}

std::vector<AnalyticSpectrumTerm> analytic_terms_nonrephasing(const ExcitonSystem& sys) {
  const Dimer d = unpack(sys);
  const double mag = d.mag, mbg = d.mbg, mfa = d.mfa, mfb = d.mfb;
  auto O = [&](int i, int j) { return d.O(i, j); };
  const std::complex<double> Oba_r = -std::conj(O(b, a));
  return {
      // upper cross peak: GSB - ESA
      {mag * mag * mbg * mbg, O(g, g), O(a, g), O(b, g)},
      {-mag * mag * mfa * mfa, O(a, a), O(a, g), O(b, g)},
      // lower cross peak: GSB - ESA
      {mag * mag * mbg * mbg, O(g, g), O(b, g), O(a, g)},
      {-mbg * mbg * mfb * mfb, O(b, b), O(b, g), O(a, g)},
      // alpha diagonal: GSB + SE + oscillating coherence
      {std::pow(mag, 4), O(g, g), O(a, g), O(a, g)},
      {std::pow(mag, 4), O(a, a), O(a, g), O(a, g)},
      {mag * mag * mbg * mbg, Oba_r, O(a, g), O(a, g)},
      {-mag * mbg * mfa * mfb, Oba_r, O(a, g), O(f, b)},
      // beta diagonal: GSB + SE + oscillating coherence
      {std::pow(mbg, 4), O(g, g), O(b, g), O(b, g)},
      {std::pow(mbg, 4), O(b, b), O(b, g), O(b, g)},
      {mag * mag * mbg * mbg, O(b, a), O(b, g), O(b, g)},
      {-mag * mbg * mfa * mfb, O(b, a), O(b, g), O(f, a)},
  };
}

std::complex<double> analytic_rephasing(const ExcitonSystem& sys, double omega1, double tau2,
                                        double omega3) {
  return eval_grid(analytic_terms_rephasing(sys), omega1, tau2, omega3);
}

std::complex<double> analytic_nonrephasing(const ExcitonSystem& sys, double omega1, double tau2,
                                           double omega3) {
  return eval_grid(analytic_terms_nonrephasing(sys), omega1, tau2, omega3);
}

std::complex<double> analytic_rephasing_time(const ExcitonSystem& sys, double tau1, double tau2,
                                             double tau3) {
  return eval_time(analytic_terms_rephasing(sys), tau1, tau2, tau3);
}

std::complex<double> analytic_nonrephasing_time(const ExcitonSystem& sys, double tau1,
                                                double tau2, double tau3) {
  return eval_time(analytic_terms_nonrephasing(sys), tau1, tau2, tau3);
}

std::complex<double> analytic_two_quantum(const ExcitonSystem& sys, double omega2,
                                          double omega3) {
  const Dimer d = unpack(sys);
  const double P = (d.mag * d.mfa + d.mbg * d.mfb) * (d.mag * d.mfa - d.mbg * d.mfb);
  const double wf = sys.energies[f];
  if (std::abs(omega2 - wf) > 1e-9) return 0.0;
  if (std::abs(omega3 - sys.energies[a]) <= 1e-9) return P;
  if (std::abs(omega3 - sys.energies[b]) <= 1e-9) return -P;
  return 0.0;
}

std::complex<double> analytic_two_quantum_time(const ExcitonSystem& sys, double tau2,
                                               double tau3) {
  const Dimer d = unpack(sys);
  const double P = (d.mag * d.mfa + d.mbg * d.mfb) * (d.mag * d.mfa - d.mbg * d.mfb);
  return P * std::exp(-kI * sys.energies[f] * tau2) *
         (std::exp(-kI * sys.energies[a] * tau3) - std::exp(-kI * sys.energies[b] * tau3));
}

}  // namespace echo2d
