#ifndef ECHO2D_DIAGRAM_HPP
#define ECHO2D_DIAGRAM_HPP

#include <string>
#include <vector>

#include "echo2d/pathway.hpp"
#include "echo2d/system.hpp"

namespace echo2d {

// Text rendering of one pathway as a double-sided ladder, time running down
// the page: the initial population, three field interactions alternating with
// the three delay intervals, and the emission row.
struct DiagramText {
  std::vector<std::string> lines;   // 4 interaction rows + 4 evolution rows
  std::vector<std::string> arrows;  // per-interaction: "right" (E+) or "left" (E-)
  std::string emission;             // the wavy-arrow emission row

  std::string str() const;  // lines joined with '\n', trailing newline
};

DiagramText render_diagram(const ExcitonSystem& sys, const Pathway& p);

}  // namespace echo2d

#endif
