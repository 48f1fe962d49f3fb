#ifndef ECHO2D_PATHWAY_HPP
#define ECHO2D_PATHWAY_HPP

#include <array>
#include <string>
#include <vector>

#include "echo2d/system.hpp"

namespace echo2d {

// Pulse orderings for the detected direction k_sig = -k_A + k_B + k_C,
// labelled by which time slot the conjugated beam A occupies.
enum class ExperimentKind { Rephasing, NonRephasing, TwoQuantum };

std::string to_string(ExperimentKind kind);
ExperimentKind experiment_kind_from_string(const std::string& name);

// Field sign pattern (p1, p2, p3): +1 for E+, -1 for E-.
std::array<int, 3> field_signs(ExperimentKind kind);

// Candidate commutator-term indices r surviving phase matching for this
// ordering, before zero-dipole pruning: R {1,2,3,4}, nR {1,2,4}, 2Q {1,3}.
std::vector<int> candidate_r_set(ExperimentKind kind);

// Whether the detected branch is the complex conjugate one (rephasing only).
bool conjugate_branch(ExperimentKind kind);

// One term of the expanded nested commutator: a chain of density-matrix
// elements |ket><bra| through the three delay intervals plus the emission.
struct Pathway {
  int r_index = 0;                       // 1..4, which F_r the term came from
  std::array<int, 3> signs{};            // field signs (p1,p2,p3)
  std::array<char, 3> sides{};           // 'L'/'R': interaction side relative to rho0
  std::array<std::array<int, 2>, 4> elements{};  // (ket,bra) after interactions 1..3 and emission
  double dipole_product = 0.0;           // four mu entries times the F_r sign
  bool is_conjugate_branch = false;
};

// Expands the surviving F_r trace terms over the dipole matrix elements of
// `sys`, pruning zero-amplitude chains. Deterministic order: r ascending,
// then lexicographic on the visited level indices.
std::vector<Pathway> enumerate_pathways(const ExcitonSystem& sys, ExperimentKind kind);

enum class PathwayClass { GSB, SE, ESA, TwoQuantum };
std::string to_string(PathwayClass c);

// Labels by the interval-2 element: (g,g) -> GSB; a band-2 ket or bra during
// interval 3 -> ESA; interval-2 element with a band-2 level -> 2Q; else SE.
PathwayClass classify_pathway(const ExcitonSystem& sys, const Pathway& p);

}  // namespace echo2d

#endif
