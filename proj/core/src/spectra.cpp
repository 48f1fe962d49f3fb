#include "echo2d/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <map>
#include <set>
#include <stdexcept>
#include <thread>
#include <tuple>

namespace echo2d {

namespace {

constexpr std::complex<double> kI(0.0, 1.0);

double round_to(double x, double q) { return std::round(x / q) * q; }

// i/(omega - Omega): half-sided transform of e^{-i Omega t}
std::complex<double> lorentzian(double omega, std::complex<double> Omega) {
  return kI / (omega - Omega);
}

void require_broadened(const std::vector<PathwayAmplitude>& amps, bool two_quantum) {
  for (const auto& a : amps) {
    const auto& A = two_quantum ? a.Omega2 : a.Omega1;
    const auto& B = a.Omega3;
    if (A.imag() >= 0.0 || B.imag() >= 0.0)
      throw std::domain_error(
          "spectrum_grid: transformed interval has zero dephasing width; use stick mode");
  }
}

StickSpectrum sticks_impl(const std::vector<PathwayAmplitude>& amps, double tau_fixed,
                          bool two_quantum) {
  for (const auto& a : amps) {
    const auto& A = two_quantum ? a.Omega2 : a.Omega1;
    const auto& B = a.Omega3;
    const auto& phase = two_quantum ? a.Omega1 : a.Omega2;
    if (A.imag() != 0.0 || B.imag() != 0.0 || phase.imag() != 0.0)
      throw std::domain_error("stick_spectrum: requires Gamma = 0; use spectrum_grid");
  }
  // class key: rounded (row frequency, omega3, tau2-frequency); the peak
  // keeps the first member's unrounded position so downstream comparisons
  // see exact eigenfrequencies, not 1e-9 grid snaps
  struct Class {
    std::complex<double> amp;
    double row = 0.0, col = 0.0, phase = 0.0;
    bool seen = false;
  };
  std::map<std::tuple<double, double, double>, Class> classes;
  constexpr double q = 1e-9;
  for (const auto& a : amps) {
    const auto& row = two_quantum ? a.Omega2 : a.Omega1;
    const auto& phase = two_quantum ? a.Omega1 : a.Omega2;
    auto& c = classes[{round_to(row.real(), q), round_to(a.Omega3.real(), q),
                       round_to(phase.real(), q)}];
    c.amp += a.amp;
    if (!c.seen) {
      c.row = row.real();
      c.col = a.Omega3.real();
      c.phase = phase.real();
      c.seen = true;
    }
  }
  double scale = 0.0;
  for (const auto& [k, c] : classes) scale = std::max(scale, std::abs(c.amp));
  StickSpectrum out;
  for (const auto& [k, c] : classes) {
    if (std::abs(c.amp) <= 1e-12 * scale) continue;  // fully cancelled class
    StickPeak pk;
    pk.omega1 = c.row;
    pk.omega3 = c.col;
    pk.Omega2 = c.phase;
    pk.amp0 = c.amp * std::exp(-kI * pk.Omega2 * tau_fixed);
    out.peaks.push_back(pk);
  }
  return out;
}

}  // namespace

void FrequencyGridSpec::validate() const {
  if (n_points < 2) throw std::invalid_argument("FrequencyGridSpec: n_points must be >= 2");
  if (!(omega_max > omega_min))
    throw std::invalid_argument("FrequencyGridSpec: omega_max must exceed omega_min");
}

std::string to_string(SpectrumKind kind) {
  switch (kind) {
    case SpectrumKind::Rephasing: return "rephasing";
    case SpectrumKind::NonRephasing: return "nonrephasing";
    case SpectrumKind::TwoQuantum: return "two-quantum";
    case SpectrumKind::FullFourier: return "full-fourier";
  }
  throw std::logic_error("unreachable");
}

SpectrumKind spectrum_kind(ExperimentKind kind) {
  switch (kind) {
    case ExperimentKind::Rephasing: return SpectrumKind::Rephasing;
    case ExperimentKind::NonRephasing: return SpectrumKind::NonRephasing;
    case ExperimentKind::TwoQuantum: return SpectrumKind::TwoQuantum;
  }
  throw std::logic_error("unreachable");
}

int StickSpectrum::n_positions() const {
  // distinct up to the 1e-9 grouping quantum (representative positions are
  // unrounded and may differ in the last bits across classes)
  std::set<std::pair<double, double>> pos;
  for (const auto& p : peaks)
    pos.insert({round_to(p.omega1, 1e-9), round_to(p.omega3, 1e-9)});
  return (int)pos.size();
}

StickSpectrum stick_spectrum(const std::vector<PathwayAmplitude>& amps, double tau2) {
  return sticks_impl(amps, tau2, false);
}

StickSpectrum stick_spectrum_two_quantum(const std::vector<PathwayAmplitude>& amps, double tau1) {
  return sticks_impl(amps, tau1, true);
}

int grid_thread_count() {
  int n = (int)std::thread::hardware_concurrency();
  if (n < 1) n = 1;
  if (const char* env = std::getenv("ECHO2D_THREADS")) {
    const int cap = std::atoi(env);
    n = std::min(n, cap < 1 ? 1 : cap);
  }
  return n;
}

SpectrumGrid spectrum_grid(const std::vector<PathwayAmplitude>& amps,
                           const FrequencyGridSpec& spec, double tau_fixed,
                           ExperimentKind kind) {
  spec.validate();
  const bool two_quantum = kind == ExperimentKind::TwoQuantum;
  require_broadened(amps, two_quantum);

  // fold the fixed-delay phase into each term's prefactor
  struct Term {
    std::complex<double> amp, Omega_row, Omega3;
  };
  std::vector<Term> terms(amps.size());
  for (size_t t = 0; t < amps.size(); ++t) {
    const auto& a = amps[t];
    const auto& phase = two_quantum ? a.Omega1 : a.Omega2;
    terms[t] = {a.amp * std::exp(-kI * phase * tau_fixed),
                two_quantum ? a.Omega2 : a.Omega1, a.Omega3};
  }

  SpectrumGrid grid;
  grid.spec = spec;
  grid.spec.axes = two_quantum ? AxisPair::Omega2_Omega3 : AxisPair::Omega1_Omega3;
  grid.tau_fixed = tau_fixed;
  grid.kind = spectrum_kind(kind);
  const int n = spec.n_points;
  grid.values.assign((size_t)n * n, 0.0);

  auto rows = [&](int r0, int r1) {
    for (int i = r0; i < r1; ++i) {
      const double w_row = spec.axis_value(i);
      for (const auto& t : terms) {
        const std::complex<double> left = t.amp * lorentzian(w_row, t.Omega_row);
        for (int j = 0; j < n; ++j)
          grid.values[(size_t)i * n + j] += left * lorentzian(spec.axis_value(j), t.Omega3);
      }
    }
  };
  const int workers = std::min(grid_thread_count(), n);
  if (workers <= 1) {
    rows(0, n);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w)
      pool.emplace_back(rows, n * w / workers, n * (w + 1) / workers);
    for (auto& th : pool) th.join();
  }
  return grid;
}

SpectrumGrid spectrum_grid_quadrature(const std::vector<PathwayAmplitude>& amps,
                                      const FrequencyGridSpec& spec, double tau_fixed,
                                      ExperimentKind kind, double t_max, int n_time) {
  spec.validate();
  if (n_time < 2 || !(t_max > 0.0))
    throw std::invalid_argument("spectrum_grid_quadrature: need n_time >= 2, t_max > 0");
  const bool two_quantum = kind == ExperimentKind::TwoQuantum;
  const int n = spec.n_points;
  const double dt = t_max / (n_time - 1);

  SpectrumGrid grid;
  grid.spec = spec;
  grid.spec.axes = two_quantum ? AxisPair::Omega2_Omega3 : AxisPair::Omega1_Omega3;
  grid.tau_fixed = tau_fixed;
  grid.kind = spectrum_kind(kind);
  grid.values.assign((size_t)n * n, 0.0);

  // separable per-term transforms keep this O(terms * n * n_time)
  for (const auto& a : amps) {
    const auto& phase = two_quantum ? a.Omega1 : a.Omega2;
    const auto& Omega_row = two_quantum ? a.Omega2 : a.Omega1;
    const std::complex<double> pref = a.amp * std::exp(-kI * phase * tau_fixed);
    std::vector<std::complex<double>> Lrow(n, 0.0), Lcol(n, 0.0);
    for (int k = 0; k < n_time; ++k) {
      const double t = k * dt;
      const double w = (k == 0 || k == n_time - 1) ? 0.5 * dt : dt;  // trapezoid
      for (int i = 0; i < n; ++i) {
        Lrow[i] += w * std::exp(kI * (spec.axis_value(i) - Omega_row) * t);
        Lcol[i] += w * std::exp(kI * (spec.axis_value(i) - a.Omega3) * t);
      }
    }
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) grid.values[(size_t)i * n + j] += pref * Lrow[i] * Lcol[j];
  }
  return grid;
}

SpectrumGrid full_fourier(const SpectrumGrid& reph, const SpectrumGrid& nonreph) {
  const auto& rs = reph.spec;
  const auto& ns = nonreph.spec;
  if (rs.n_points != ns.n_points || std::abs(rs.omega_min + ns.omega_max) > 1e-12 ||
      std::abs(rs.omega_max + ns.omega_min) > 1e-12)
    throw std::invalid_argument("full_fourier: rephasing row axis must mirror the nonrephasing one");
  if (reph.kind != SpectrumKind::Rephasing || nonreph.kind != SpectrumKind::NonRephasing)
    throw std::invalid_argument("full_fourier: expects one rephasing and one nonrephasing grid");

  // The mirrored row axes cover different omega3 columns only if the grids
  // are not square-symmetric; columns must coincide for a pointwise sum.
  SpectrumGrid out;
  out.spec = ns;
  out.tau_fixed = nonreph.tau_fixed;
  out.kind = SpectrumKind::FullFourier;
  const int n = ns.n_points;
  out.values.assign((size_t)n * n, 0.0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      out.values[(size_t)i * n + j] = nonreph.at(i, j) + reph.at(n - 1 - i, j);
  return out;
}

std::vector<std::complex<double>> waiting_time_trace(const std::vector<PathwayAmplitude>& amps,
                                                     double omega1, double omega3,
                                                     const std::vector<double>& tau2_grid,
                                                     bool broadened) {
  for (double t : tau2_grid)
    if (t < 0.0) throw std::invalid_argument("waiting_time_trace: tau2 must be >= 0");

  std::vector<std::complex<double>> out;
  out.reserve(tau2_grid.size());
  if (broadened) {
    for (double t2 : tau2_grid) {
      std::complex<double> v = 0.0;
      for (const auto& a : amps)
        v += a.amp * std::exp(-kI * a.Omega2 * t2) * lorentzian(omega1, a.Omega1) *
             lorentzian(omega3, a.Omega3);
      out.push_back(v);
    }
    return out;
  }

  constexpr double tol = 1e-6;
  std::vector<const PathwayAmplitude*> hits;
  for (const auto& a : amps)
    if (std::abs(a.Omega1.real() - omega1) <= tol && std::abs(a.Omega3.real() - omega3) <= tol)
      hits.push_back(&a);
  if (hits.empty())
    throw std::invalid_argument("waiting_time_trace: no stick peak at the requested position");
  for (double t2 : tau2_grid) {
    std::complex<double> v = 0.0;
    for (const auto* a : hits) v += a->amp * std::exp(-kI * a->Omega2 * t2);
    out.push_back(v);
  }
  return out;
}

}  // namespace echo2d
