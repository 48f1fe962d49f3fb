#include "echo2d/diagram.hpp"

#include <complex>
#include <cstdio>

namespace echo2d {

namespace {

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

// "| ket  ><  bra |" rail segment, padded to fixed width
std::string rail(const ExcitonSystem& sys, int ket, int bra) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "| %-5s >< %-5s |", sys.label(ket).c_str(),
                sys.label(bra).c_str());
  return buf;
}

}  // namespace

std::string DiagramText::str() const {
  std::string out;
  for (const auto& l : lines) {
    out += l;
    out += '\n';
  }
  return out;
}

DiagramText render_diagram(const ExcitonSystem& sys, const Pathway& p) {
  DiagramText d;
  const int g = sys.ground_index;

  // initial population
  d.lines.push_back("  " + rail(sys, g, g) + "   rho0");

  int ket = g, bra = g;
  for (int i = 0; i < 3; ++i) {
    const int s = p.signs[i];
    const char side = p.sides[i];
    const auto [ket2, bra2] = p.elements[i];
    // the dipole entry consumed by this interaction (always a raising entry)
    int up, lo;
    if (side == 'L') {
      up = s > 0 ? ket2 : ket;
      lo = s > 0 ? ket : ket2;
    } else {
      up = s > 0 ? bra : bra2;
      lo = s > 0 ? bra2 : bra;
    }
    const char* arrow = s > 0 ? "---->" : "<----";
    char row[160];
    std::snprintf(row, sizeof row, "  %s  E%c_%d %s  mu(%s,%s) = %s", arrow, s > 0 ? '+' : '-',
                  i + 1, side == 'L' ? "[ket]" : "[bra]", sys.label(up).c_str(),
                  sys.label(lo).c_str(), fmt(sys.dipole_raising(up, lo)).c_str());
    d.lines.emplace_back(row);
    d.arrows.push_back(s > 0 ? "right" : "left");

    const std::complex<double> Om = interval_frequency(sys, ket2, bra2);
    d.lines.push_back("  " + rail(sys, ket2, bra2) + "   tau" + std::to_string(i + 1) +
                      "  Omega = " + fmt(Om.real()) + (Om.imag() < 0.0 ? " - " : " + ") + fmt(std::abs(Om.imag())) + "i");
    ket = ket2;
    bra = bra2;
  }

  // emission closes the trace: ket lowered onto the bra level
  char row[160];
  std::snprintf(row, sizeof row, "  ~~~~>  emission  mu(%s,%s) = %s", sys.label(ket).c_str(),
                sys.label(bra).c_str(), fmt(sys.dipole_raising(ket, bra)).c_str());
  d.emission = row;
  d.lines.emplace_back(row);
  return d;
}

}  // namespace echo2d
