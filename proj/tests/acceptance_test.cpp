// Acceptance gate: one check per acceptance criterion, one [PASS]/[FAIL]
// line each; the process fails if any criterion fails.
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <numbers>
#include <random>
#include <set>
#include <vector>

#include "echo2d/dimer_oracle.hpp"
#include "echo2d/response.hpp"
#include "echo2d/spectra.hpp"
#include "echo2d/system.hpp"
#include "echo2d/units.hpp"
#include "test_helpers.hpp"

using namespace echo2d;
using std::complex;
using echo2d::testing::fig2_params;
using echo2d::testing::fig2_params_meV;
using echo2d::testing::with_fig3_rates;

namespace {

int g_failures = 0;

void report(int index, const char* name, bool ok, const std::string& detail) {
  std::printf("[%s] criterion %d: %s — %s\n", ok ? "PASS" : "FAIL", index, name, detail.c_str());
  if (!ok) ++g_failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::vector<PathwayAmplitude> amps_for(const ExcitonSystem& sys, ExperimentKind k) {
  return factor_pathways(sys, enumerate_pathways(sys, k));
}

// ---- criterion 1: peak geography -------------------------------------------
void criterion1() {
  const auto t0 = std::chrono::steady_clock::now();
  // meV caption parameters: the THz values disagree with them by ~0.2%, so
  // the 1e-12 eigensolve comparison uses the meV set (ledgered decision)
  const auto [sys, rep] = build_exciton_dimer(fig2_params_meV());
  const double w_ba_expect =
      2.0 * std::hypot(65.0, 66.0) / units::hbar_meV_fs;  // 2 sqrt((hD)^2+J^2)/hbar
  bool ok = std::abs(std::abs(rep.omega_beta - rep.omega_alpha) - w_ba_expect) <=
            1e-12 * w_ba_expect;

  const std::set<double> freqs{rep.omega_alpha, rep.omega_beta};
  int n_four = 0;
  for (auto kind : {ExperimentKind::Rephasing, ExperimentKind::NonRephasing}) {
    const auto sticks = stick_spectrum(amps_for(sys, kind), 0.0);
    if (sticks.n_positions() != 4) ok = false;
    const double flip = kind == ExperimentKind::Rephasing ? -1.0 : 1.0;
    std::set<std::pair<double, double>> pos;
    for (const auto& pk : sticks.peaks) {
      // every peak on the (w_alpha, w_beta) tensor grid, to 1e-12 relative
      bool hit1 = false, hit3 = false;
      for (double w : freqs) {
        hit1 |= std::abs(flip * pk.omega1 - w) <= 1e-12 * w;
        hit3 |= std::abs(pk.omega3 - w) <= 1e-12 * w;
      }
      ok = ok && hit1 && hit3;
      pos.insert({pk.omega1, pk.omega3});
    }
    n_four += (int)pos.size();
  }
  const double dt = seconds_since(t0);
  ok = ok && n_four == 8 && dt < 1.0;
  char buf[256];
  std::snprintf(buf, sizeof buf,
                "R and nR sticks: 4+4 tensor positions, w_ba = %.6f rad/fs vs eigensolve "
                "%.6f (1e-12 rel), %.3f s",
                std::abs(rep.omega_beta - rep.omega_alpha), w_ba_expect, dt);
  report(1, "peak geography (Fig. 2a)", ok, buf);
}

// ---- criterion 2: oscillation assignment ------------------------------------
void criterion2() {
  const auto t0 = std::chrono::steady_clock::now();
  const auto [sys, rep] = build_exciton_dimer(fig2_params());
  const double w_ba = std::abs(rep.omega_beta - rep.omega_alpha);
  const double wa = rep.omega_alpha, wb = rep.omega_beta;

  std::vector<double> t2grid;
  const int N = 500;
  const double dt2 = 1.0;  // 0..500 fs window
  for (int i = 0; i < N; ++i) t2grid.push_back(i * dt2);

  auto is_constant = [](const std::vector<complex<double>>& tr) {
    for (const auto& v : tr)
      if (std::abs(v - tr[0]) > 1e-10 * (1.0 + std::abs(tr[0]))) return false;
    return true;
  };
  auto dominant_freq = [&](const std::vector<complex<double>>& tr) {
    complex<double> mean = 0.0;
    for (const auto& v : tr) mean += v / double(N);
    double best = 0.0;
    int best_k = 0;
    for (int k = 1; k < N; ++k) {
      complex<double> c = 0.0;
      for (int i = 0; i < N; ++i)
        c += (tr[i] - mean) *
             std::exp(complex<double>(0.0, -2.0 * std::numbers::pi * k * i / N));
      if (std::abs(c) > best) {
        best = std::abs(c);
        best_k = k;
      }
    }
    return std::min(best_k, N - best_k) * 2.0 * std::numbers::pi / (N * dt2);
  };
  const double bin = 2.0 * std::numbers::pi / (N * dt2);

  const auto R = amps_for(sys, ExperimentKind::Rephasing);
  const auto NR = amps_for(sys, ExperimentKind::NonRephasing);
  bool ok = true;
  // rephasing: diagonals constant, cross peaks oscillate at w_ba
  for (double w : {wa, wb}) ok = ok && is_constant(waiting_time_trace(R, -w, w, t2grid));
  for (auto [x, y] : {std::pair{wa, wb}, {wb, wa}}) {
    const auto tr = waiting_time_trace(R, -x, y, t2grid);
    ok = ok && !is_constant(tr) && std::abs(dominant_freq(tr) - w_ba) <= bin;
  }
  // nonrephasing: the reverse
  for (auto [x, y] : {std::pair{wa, wb}, {wb, wa}})
    ok = ok && is_constant(waiting_time_trace(NR, x, y, t2grid));
  for (double w : {wa, wb}) {
    const auto tr = waiting_time_trace(NR, w, w, t2grid);
    ok = ok && !is_constant(tr) && std::abs(dominant_freq(tr) - w_ba) <= bin;
  }
  const double dt = seconds_since(t0);
  ok = ok && dt < 5.0;
  char buf[256];
  std::snprintf(buf, sizeof buf,
                "R cross / nR diagonal traces oscillate at w_ba = %.4f rad/fs (FFT bin %.4f), "
                "the others constant, %.3f s",
                w_ba, bin, dt);
  report(2, "oscillation assignment (Fig. 2b-c)", ok, buf);
}

// ---- criterion 3: dephasing decay -------------------------------------------
void criterion3() {
  const auto t0 = std::chrono::steady_clock::now();
  auto [sys, rep] = build_exciton_dimer(fig2_params());
  sys = with_fig3_rates(sys);  // Gamma_ii = 0, Gamma_ij = 0.02 fs^-1
  const auto amps = amps_for(sys, ExperimentKind::Rephasing);

  // cross-peak envelope over tau2 in [0, 150] fs: isolate the oscillating
  // residual against the tau2 -> infinity background, then log-linear fit
  std::vector<double> t2grid;
  for (int i = 0; i <= 150; ++i) t2grid.push_back((double)i);
  const auto tr =
      waiting_time_trace(amps, -rep.omega_alpha, rep.omega_beta, t2grid, true);
  const auto base =
      waiting_time_trace(amps, -rep.omega_alpha, rep.omega_beta, {1e8}, true)[0];
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const int N = (int)t2grid.size();
  for (int i = 0; i < N; ++i) {
    const double y = std::log(std::abs(tr[i] - base));
    sx += t2grid[i];
    sy += y;
    sxx += t2grid[i] * t2grid[i];
    sxy += t2grid[i] * y;
  }
  const double slope = (N * sxy - sx * sy) / (N * sxx - sx * sx);
  const double T2 = -1.0 / slope;
  const double dt = seconds_since(t0);
  const bool ok = std::abs(T2 - 50.0) / 50.0 <= 0.05 && dt < 10.0;
  char buf[256];
  std::snprintf(buf, sizeof buf, "fit T2 = %.3f fs vs 50 fs (tolerance 5%%), %.3f s", T2, dt);
  report(3, "dephasing decay (Fig. 3)", ok, buf);
}

// ---- criterion 4: uncoupled limits -------------------------------------------
void criterion4() {
  SiteDimerParams p = fig2_params();
  p.coupling_meV = 0.0;
  const auto sys = build_exciton_dimer(p).first;
  bool ok = true;
  // Note: stick amplitudes are kept literal, carrying the factor 2 of the
  // parent closed form (2 mu^4); the reduced J = 0 expression quotes mu^4
  // up to that shared proportionality constant (ledgered decision).
  const double expect_a = 2.0 * std::pow(p.mu_a, 4), expect_b = 2.0 * std::pow(p.mu_b, 4);
  for (auto kind : {ExperimentKind::Rephasing, ExperimentKind::NonRephasing}) {
    const auto sticks = stick_spectrum(amps_for(sys, kind), 0.0);
    ok = ok && sticks.peaks.size() == 2 && sticks.n_positions() == 2;
    for (const auto& pk : sticks.peaks) {
      const double expect =
          std::abs(pk.omega3 - p.omega_a) < 1e-9 ? expect_a : expect_b;
      ok = ok && std::abs(pk.amp0.real() - expect) <= 1e-12 * expect && pk.amp0.imag() == 0.0;
    }
  }
  // two-quantum signal vanishes identically
  const auto q = amps_for(sys, ExperimentKind::TwoQuantum);
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> delay(0.0, 80.0);
  double worst = 0.0;
  for (int i = 0; i < 50; ++i)
    worst = std::max(worst,
                     std::abs(signal_time_domain(q, delay(rng), delay(rng), delay(rng))));
  ok = ok && worst <= 1e-14;
  char buf[256];
  std::snprintf(buf, sizeof buf,
                "J=0: 2 sticks with literal amps 2mu_a^4 = %.6f, 2mu_b^4 = %.6f (1e-12); "
                "|2Q| <= %.2e (1e-14 abs)",
                expect_a, expect_b, worst);
  report(4, "uncoupled limits", ok, buf);
}

// ---- criterion 5: oracle triangle --------------------------------------------
void criterion5() {
  const auto t0 = std::chrono::steady_clock::now();
  std::mt19937_64 rng(55);
  std::uniform_real_distribution<double> w(1.8, 2.8), J(-120.0, 120.0), mu(-2.0, 2.0);
  std::uniform_real_distribution<double> rate(0.005, 0.05), delay(0.0, 60.0);
  double worst = 0.0;
  for (int i = 0; i < 50; ++i) {
    SiteDimerParams p;
    p.omega_a = w(rng);
    p.omega_b = w(rng);
    if (p.omega_b < p.omega_a) std::swap(p.omega_a, p.omega_b);
    p.coupling_meV = J(rng);
    p.mu_a = mu(rng);
    p.mu_b = mu(rng);
    auto sys = build_exciton_dimer(p).first;
    sys = set_rates(sys, std::vector<double>(4, rate(rng)), false);
    for (auto kind : {ExperimentKind::Rephasing, ExperimentKind::NonRephasing}) {
      const auto amps = amps_for(sys, kind);
      for (int k = 0; k < 20; ++k) {
        const double t1 = delay(rng), t2 = delay(rng), t3 = delay(rng);
        const auto a = signal_time_domain(amps, t1, t2, t3);
        const auto b = dense_oracle(sys, kind, t1, t2, t3);
        const auto c = kind == ExperimentKind::Rephasing
                           ? analytic_rephasing_time(sys, t1, t2, t3)
                           : analytic_nonrephasing_time(sys, t1, t2, t3);
        worst = std::max({worst, std::abs(a - b) / (1.0 + std::abs(b)),
                          std::abs(a - c) / (1.0 + std::abs(c)),
                          std::abs(b - c) / (1.0 + std::abs(c))});
      }
    }
  }
  const double dt = seconds_since(t0);
  const bool ok = worst <= 1e-9 && dt < 30.0;
  char buf[256];
  std::snprintf(buf, sizeof buf,
                "50 random dimers x 20 probes x {R, nR}: max pairwise relative deviation "
                "%.3e (tol 1e-9), %.3f s",
                worst, dt);
  report(5, "oracle triangle", ok, buf);
}

// ---- criterion 6: selection rules --------------------------------------------
void criterion6() {
  bool ok = candidate_r_set(ExperimentKind::Rephasing) == std::vector<int>{1, 2, 3, 4} &&
            candidate_r_set(ExperimentKind::NonRephasing) == std::vector<int>{1, 2, 4} &&
            candidate_r_set(ExperimentKind::TwoQuantum) == std::vector<int>{1, 3};
  std::mt19937_64 rng(66);
  for (int i = 0; i < 60 && ok; ++i) {
    const auto sys = echo2d::testing::random_system(rng);
    for (auto kind :
         {ExperimentKind::Rephasing, ExperimentKind::NonRephasing, ExperimentKind::TwoQuantum}) {
      const auto rset = candidate_r_set(kind);
      for (const auto& p : enumerate_pathways(sys, kind)) {
        ok = ok && std::count(rset.begin(), rset.end(), p.r_index) == 1;
        ok = ok && !(p.signs[0] == p.signs[1] && p.signs[1] == p.signs[2]);
      }
    }
  }
  report(6, "selection rules", ok,
         "r-families {1,2,3,4}/{1,2,4}/{1,3}; no (+,+,+) or (-,-,-) pattern over 60 random "
         "systems (note: rephasing r=1 survives phase matching but carries zero pathways)");
}

// ---- criterion 7: lineshape contract ------------------------------------------
void criterion7() {
  const double G = 0.02, w0 = 2.4;
  PathwayAmplitude a;
  a.amp = 1.0;
  a.Omega1 = {-w0, -G};
  a.Omega2 = {0.0, 0.0};
  a.Omega3 = {w0, -G};
  const int n = 4001;
  FrequencyGridSpec spec3{w0 - 20.0 * G, w0 + 20.0 * G, n};
  const double dw = (spec3.omega_max - spec3.omega_min) / (n - 1);

  // omega3 slice through the peak (omega1 held at its peak value)
  std::vector<double> mod2(n);
  const complex<double> L1 = complex<double>(0, 1) / (-w0 - a.Omega1);
  for (int j = 0; j < n; ++j) {
    const double w3 = spec3.axis_value(j);
    mod2[j] = std::norm(a.amp * L1 * (complex<double>(0, 1) / (w3 - a.Omega3)));
  }
  const int mid = n / 2;
  // HWHM of the modulus-squared Lorentzian
  const double half = mod2[mid] / 2.0;
  int jh = mid;
  while (jh < n - 1 && mod2[jh] > half) ++jh;
  const double hwhm = (jh - mid) * dw;
  bool ok = std::abs(hwhm - G) / G <= 0.02;

  // integrated area over the +-20 Gamma window vs the closed form
  // |amp L1|^2 * 2 arctan(20) / Gamma (the infinite-domain pi/Gamma value
  // carries a 3.2% tail outside the window, so the windowed form is the
  // honest comparison; ledgered decision)
  double area = 0.0;
  for (int j = 0; j < n; ++j) area += (j == 0 || j == n - 1 ? 0.5 : 1.0) * mod2[j];
  area *= dw;
  const double expect = std::norm(a.amp * L1) * 2.0 * std::atan(20.0) / G;
  ok = ok && std::abs(area - expect) / expect <= 0.02;
  const double full = std::norm(a.amp * L1) * std::numbers::pi / G;
  char buf[256];
  std::snprintf(buf, sizeof buf,
                "HWHM = %.5f vs Gamma = %.5f; windowed area %.4f vs closed form %.4f "
                "(pi/Gamma form = %.4f, window covers %.1f%% of it)",
                hwhm, G, area, expect, full, 100.0 * expect / full);
  report(7, "lineshape contract", ok, buf);
}

// ---- criterion 8: unit sanity --------------------------------------------------
void criterion8() {
  bool ok = std::abs(units::mev_to_thz(1510.0) - 365.0) / 365.0 <= 0.002 &&
            std::abs(units::mev_to_thz(1640.0) - 397.0) / 397.0 <= 0.002;

  // biexciton shift moves every ESA omega3 stick down by exactly shift/hbar
  SiteDimerParams p0 = fig2_params();
  SiteDimerParams p1 = p0;
  p1.biexciton_shift_meV = 1.5;
  const auto s0 = build_exciton_dimer(p0).first;
  const auto s1 = build_exciton_dimer(p1).first;
  const double shift = 1.5 / units::hbar_meV_fs;
  for (auto kind : {ExperimentKind::Rephasing, ExperimentKind::NonRephasing}) {
    const auto a0 = amps_for(s0, kind);
    const auto a1 = amps_for(s1, kind);
    const auto ps = enumerate_pathways(s0, kind);
    for (size_t i = 0; i < a0.size(); ++i) {
      const bool esa = classify_pathway(s0, ps[i]) == PathwayClass::ESA;
      const double d = a0[i].Omega3.real() - a1[i].Omega3.real();
      ok = ok && std::abs(d - (esa ? shift : 0.0)) <= 1e-15;
    }
  }
  char buf[256];
  std::snprintf(buf, sizeof buf,
                "1510 meV = %.2f THz, 1640 meV = %.2f THz (0.2%%); 1.5 meV shift moves ESA "
                "omega3 by -%.6f rad/fs exactly",
                units::mev_to_thz(1510.0), units::mev_to_thz(1640.0), shift);
  report(8, "unit sanity", ok, buf);
}

}  // namespace

int main() {
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  if (g_failures) {
    std::printf("acceptance: %d criterion(s) FAILED\n", g_failures);
    return 1;
  }
  std::printf("acceptance: all 8 criteria passed\n");
  return 0;
}
