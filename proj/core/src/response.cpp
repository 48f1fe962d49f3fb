#include "echo2d/response.hpp"

#include <Eigen/Dense>

namespace echo2d {

PathwayAmplitude factor_pathway(const ExcitonSystem& sys, const Pathway& p,
                                const FieldSet& fields) {
  PathwayAmplitude a;
  a.is_conjugate_branch = p.is_conjugate_branch;
  // The mirrored (bra-side) element chain of the conjugate branch already
  // carries the reflected frequencies -conj(Omega); only the detected-branch
  // sign remains to apply here.
  std::complex<double> amp = p.dipole_product * (p.is_conjugate_branch ? -1.0 : 1.0);
  for (int j = 0; j < 3; ++j)
    amp *= p.signs[j] > 0 ? fields.pulse[j] : std::conj(fields.pulse[j]);
  a.amp = amp;
  a.Omega1 = interval_frequency(sys, p.elements[0][0], p.elements[0][1]);
  a.Omega2 = interval_frequency(sys, p.elements[1][0], p.elements[1][1]);
  a.Omega3 = interval_frequency(sys, p.elements[2][0], p.elements[2][1]);
  return a;
}

std::vector<PathwayAmplitude> factor_pathways(const ExcitonSystem& sys,
                                              const std::vector<Pathway>& ps,
                                              const FieldSet& fields) {
  std::vector<PathwayAmplitude> out;
  out.reserve(ps.size());
  for (const auto& p : ps) out.push_back(factor_pathway(sys, p, fields));
  return out;
}

std::complex<double> signal_time_domain(const std::vector<PathwayAmplitude>& amps, double tau1,
                                        double tau2, double tau3) {
  if (tau1 < 0.0 || tau2 < 0.0 || tau3 < 0.0) return 0.0;
  const std::complex<double> mi(0.0, -1.0);
  std::complex<double> tot = 0.0;
  for (const auto& a : amps)
    tot += a.amp * std::exp(mi * (a.Omega1 * tau1 + a.Omega2 * tau2 + a.Omega3 * tau3));
  return tot;
}

std::complex<double> dense_oracle(const ExcitonSystem& sys, ExperimentKind kind, double tau1,
                                  double tau2, double tau3, const FieldSet& fields) {
  if (tau1 < 0.0 || tau2 < 0.0 || tau3 < 0.0) return 0.0;
  const int n = sys.n_levels;
  using Mat = Eigen::MatrixXcd;

  Mat mup = Mat::Zero(n, n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) mup(a, b) = sys.mu_plus[a * n + b];
  const Mat mum = mup.transpose();
  const Mat mu = mup + mum;

  // element-wise interval propagator exp(-i(w_a - w_b)t - Gamma_ab t)
  auto prop = [&](Mat& X, double t) {
    const std::complex<double> mi(0.0, -1.0);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        X(a, b) *= std::exp(mi * (sys.energies[a] - sys.energies[b]) * t -
                            sys.rate(a, b) * t);
  };

  constexpr const char* kSides[5] = {"", "LLL", "LRL", "LLR", "LRR"};
  constexpr int kSign[5] = {0, +1, -1, -1, +1};
  const auto signs = field_signs(kind);
  const bool conj = conjugate_branch(kind);
  const double taus[3] = {tau1, tau2, tau3};

  std::complex<double> tot = 0.0;
  for (int r : candidate_r_set(kind)) {
    Mat X = Mat::Zero(n, n);
    X(sys.ground_index, sys.ground_index) = 1.0;
    std::complex<double> field = 1.0;
    for (int i = 0; i < 3; ++i) {
      const int s = signs[i];
      const char side = conj ? (kSides[r][i] == 'L' ? 'R' : 'L') : kSides[r][i];
      const Mat& op = s > 0 ? mup : mum;
      X = side == 'L' ? Mat(op * X) : Mat(X * op);
      prop(X, taus[i]);
      field *= s > 0 ? fields.pulse[i] : std::conj(fields.pulse[i]);
    }
    tot += double(kSign[r]) * (mu * X).trace() * field * (conj ? -1.0 : 1.0);
  }
  return tot;
}

}  // namespace echo2d
