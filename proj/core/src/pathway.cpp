#include "echo2d/pathway.hpp"

#include <stdexcept>

namespace echo2d {

namespace {

// Interaction-side patterns of the four commutator terms, in time order, and
// the sign each term carries (the -1 on F2, F3).
constexpr const char* kSides[5] = {"", "LLL", "LRL", "LLR", "LRR"};
constexpr int kSign[5] = {0, +1, -1, -1, +1};

char mirror(char side) { return side == 'L' ? 'R' : 'L'; }

}  // namespace

std::string to_string(ExperimentKind kind) {
  switch (kind) {
    case ExperimentKind::Rephasing: return "rephasing";
    case ExperimentKind::NonRephasing: return "nonrephasing";
    case ExperimentKind::TwoQuantum: return "two-quantum";
  }
  throw std::logic_error("unreachable");
}

ExperimentKind experiment_kind_from_string(const std::string& name) {
  if (name == "rephasing") return ExperimentKind::Rephasing;
  if (name == "nonrephasing") return ExperimentKind::NonRephasing;
  if (name == "two-quantum") return ExperimentKind::TwoQuantum;
  throw std::invalid_argument("unknown experiment kind: " + name);
}

std::array<int, 3> field_signs(ExperimentKind kind) {
  switch (kind) {
    case ExperimentKind::Rephasing: return {-1, +1, +1};
    case ExperimentKind::NonRephasing: return {+1, -1, +1};
    case ExperimentKind::TwoQuantum: return {+1, +1, -1};
  }
  throw std::logic_error("unreachable");
}

std::vector<int> candidate_r_set(ExperimentKind kind) {
  switch (kind) {
    case ExperimentKind::Rephasing: return {1, 2, 3, 4};
    case ExperimentKind::NonRephasing: return {1, 2, 4};
    case ExperimentKind::TwoQuantum: return {1, 3};
  }
  throw std::logic_error("unreachable");
}

bool conjugate_branch(ExperimentKind kind) { return kind == ExperimentKind::Rephasing; }

std::vector<Pathway> enumerate_pathways(const ExcitonSystem& sys, ExperimentKind kind) {
  sys.validate();
  const int n = sys.n_levels;
  const auto signs = field_signs(kind);
  const bool conj = conjugate_branch(kind);

  std::vector<Pathway> out;
  for (int r : candidate_r_set(kind)) {
    std::array<char, 3> sides;
    for (int i = 0; i < 3; ++i)
      sides[i] = conj ? mirror(kSides[r][i]) : kSides[r][i];

    // Depth-first walk over density-matrix elements; level loops ascending,
    // so the output order is lexicographic in the visited indices.
    Pathway p;
    p.r_index = r;
    p.signs = signs;
    p.sides = sides;
    p.is_conjugate_branch = conj;
    auto walk = [&](auto&& self, int ket, int bra, int i, double dip) -> void {
      if (i == 3) {
        // emission: lowering ket -> bra closes the trace on a population
        if (sys.band[ket] == sys.band[bra] + 1 && sys.dipole_raising(ket, bra) != 0.0) {
          p.elements[3] = {bra, bra};
          p.dipole_product = dip * sys.dipole_raising(ket, bra) * kSign[r];
          out.push_back(p);
        }
        return;
      }
      const int s = signs[i];
      if (sides[i] == 'L') {
        // mu^s on the ket side: s=+ raises, s=- lowers
        for (int k2 = 0; k2 < n; ++k2) {
          const double m = s > 0 ? sys.dipole_raising(k2, ket) : sys.dipole_raising(ket, k2);
          if (m == 0.0) continue;
          p.elements[i] = {k2, bra};
          self(self, k2, bra, i + 1, dip * m);
        }
      } else {
        // mu^s on the bra side: s=+ lowers, s=- raises
        for (int b2 = 0; b2 < n; ++b2) {
          const double m = s > 0 ? sys.dipole_raising(bra, b2) : sys.dipole_raising(b2, bra);
          if (m == 0.0) continue;
          p.elements[i] = {ket, b2};
          self(self, ket, b2, i + 1, dip * m);
        }
      }
    };
    walk(walk, sys.ground_index, sys.ground_index, 0, 1.0);
  }
  return out;
}

std::string to_string(PathwayClass c) {
  switch (c) {
    case PathwayClass::GSB: return "GSB";
    case PathwayClass::SE: return "SE";
    case PathwayClass::ESA: return "ESA";
    case PathwayClass::TwoQuantum: return "2Q";
  }
  throw std::logic_error("unreachable");
}

PathwayClass classify_pathway(const ExcitonSystem& sys, const Pathway& p) {
  const auto [k2, b2] = p.elements[1];
  if (k2 == sys.ground_index && b2 == sys.ground_index) return PathwayClass::GSB;
  if (sys.band[k2] == 2 || sys.band[b2] == 2) return PathwayClass::TwoQuantum;
  const auto [k3, b3] = p.elements[2];
  if (sys.band[k3] == 2 || sys.band[b3] == 2) return PathwayClass::ESA;
  return PathwayClass::SE;
}

}  // namespace echo2d
