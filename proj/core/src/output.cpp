#include "echo2d/output.hpp"

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

#include "echo2d/response.hpp"

namespace echo2d {

const char* const kVersion = "0.1.0";

namespace {

using nlohmann::json;

std::string g17(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::ofstream open_out(const std::string& path, std::ios::openmode mode = std::ios::out) {
  std::ofstream out(path, mode);
  if (!out) throw std::runtime_error("cannot write " + path);
  return out;
}

json complex_json(std::complex<double> v) { return json{{"re", v.real()}, {"im", v.imag()}}; }

}  // namespace

std::string to_string(Channel c) {
  switch (c) {
    case Channel::Real: return "real";
    case Channel::Imag: return "imag";
    case Channel::Abs: return "abs";
  }
  throw std::logic_error("unreachable");
}

double channel_value(std::complex<double> v, Channel c) {
  switch (c) {
    case Channel::Real: return v.real();
    case Channel::Imag: return v.imag();
    case Channel::Abs: return std::abs(v);
  }
  throw std::logic_error("unreachable");
}

void write_grid_csv(const std::string& path, const SpectrumGrid& grid, Channel c) {
  auto out = open_out(path);
  const int n = grid.spec.n_points;
  const char* row_axis = grid.spec.axes == AxisPair::Omega2_Omega3 ? "omega2" : "omega1";
  out << row_axis << "\\omega3";
  for (int j = 0; j < n; ++j) out << ',' << g17(grid.spec.axis_value(j));
  out << '\n';
  for (int i = 0; i < n; ++i) {
    out << g17(grid.spec.axis_value(i));
    for (int j = 0; j < n; ++j) out << ',' << g17(channel_value(grid.at(i, j), c));
    out << '\n';
  }
}

std::pair<double, double> write_grid_pgm(const std::string& path, const SpectrumGrid& grid,
                                         Channel c) {
  const int n = grid.spec.n_points;
  double lo = channel_value(grid.at(0, 0), c), hi = lo;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const double v = channel_value(grid.at(i, j), c);
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
  const double span = hi > lo ? hi - lo : 1.0;

  auto out = open_out(path, std::ios::binary);
  out << "P5\n" << n << ' ' << n << "\n65535\n";
  // row 0 at the top of the image = highest row-axis frequency
  for (int i = n - 1; i >= 0; --i)
    for (int j = 0; j < n; ++j) {
      const double v = (channel_value(grid.at(i, j), c) - lo) / span;
      const auto p = (uint16_t)std::lround(v * 65535.0);
      const unsigned char bytes[2] = {(unsigned char)(p >> 8), (unsigned char)(p & 0xff)};
      out.write((const char*)bytes, 2);
    }
  return {lo, hi};
}

void write_sticks_json(const std::string& path, const StickSpectrum& sticks, double tau_fixed) {
  json j;
  j["tau_fixed_fs"] = tau_fixed;
  j["n_positions"] = sticks.n_positions();
  j["peaks"] = json::array();
  for (const auto& p : sticks.peaks)
    j["peaks"].push_back({{"omega1", p.omega1},
                          {"omega3", p.omega3},
                          {"amp0", complex_json(p.amp0)},
                          {"Omega2", complex_json(p.Omega2)}});
  open_out(path) << j.dump(2) << '\n';
}

std::string pathway_json(const ExcitonSystem& sys, const Pathway& p) {
  json j;
  j["r_index"] = p.r_index;
  j["signs"] = p.signs;
  j["sides"] = std::string(p.sides.begin(), p.sides.end());
  j["elements"] = json::array();
  for (const auto& e : p.elements)
    j["elements"].push_back({{"ket", sys.label(e[0])}, {"bra", sys.label(e[1])}});
  j["dipole_product"] = p.dipole_product;
  j["conjugate_branch"] = p.is_conjugate_branch;
  j["class"] = to_string(classify_pathway(sys, p));
  return j.dump();
}

void write_pathways_json(const std::string& path, const ExcitonSystem& sys,
                         const std::vector<Pathway>& pathways) {
  auto out = open_out(path);
  out << "[\n";
  for (size_t i = 0; i < pathways.size(); ++i)
    out << "  " << pathway_json(sys, pathways[i]) << (i + 1 < pathways.size() ? ",\n" : "\n");
  out << "]\n";
}

void write_diagrams_text(const std::string& path, const ExcitonSystem& sys,
                         const std::vector<Pathway>& pathways) {
  auto out = open_out(path);
  for (size_t i = 0; i < pathways.size(); ++i) {
    out << "# pathway " << i << " (r = " << pathways[i].r_index << ", "
        << to_string(classify_pathway(sys, pathways[i])) << ")\n";
    out << render_diagram(sys, pathways[i]).str() << '\n';
  }
}

void write_trace_csv(const std::string& path, const std::vector<double>& tau2,
                     const std::vector<std::vector<std::complex<double>>>& traces) {
  auto out = open_out(path);
  out << "tau2_fs";
  for (size_t k = 0; k < traces.size(); ++k)
    out << ",re_" << k << ",im_" << k << ",abs_" << k;
  out << '\n';
  for (size_t i = 0; i < tau2.size(); ++i) {
    out << g17(tau2[i]);
    for (const auto& tr : traces)
      out << ',' << g17(tr[i].real()) << ',' << g17(tr[i].imag()) << ',' << g17(std::abs(tr[i]));
    out << '\n';
  }
}

std::string config_hash(const RunConfig& cfg) {
  const std::string text = canonical_config_text(cfg);
  uint64_t h = 1469598103934665603ull;  // FNV-1a
  for (unsigned char ch : text) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "%016llx", (unsigned long long)h);
  return buf;
}

}  // namespace echo2d
