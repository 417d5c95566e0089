#pragma once

// Hollow lattice diagrams, their bracket modifications and the determinant
// attached to an ordered cell sequence.

#include <compare>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hollowgh/poly.hpp"
#include "hollowgh/tableaux.hpp"

namespace hollowgh {

// An ordered cell sequence; cell (a,b) contributes the row x_j^a y_j^b.
using LatticeDiagram = std::vector<ACell>;

// gamma = (m, k, p). Requires m_i >= 1, p_i >= 0, and k_i >= 1 unless p_i = 0,
// in which case k_i = 0 is allowed (the diagram then repeats a cell).
struct HollowGamma {
  int m1 = 1, m2 = 1;
  int k1 = 1, k2 = 1;
  int p1 = 0, p2 = 0;

  // "m1,m2:k1,k2:p1,p2"; errors carry the byte offset.
  static HollowGamma parse(std::string_view text);
  void validate() const;

  int n() const { return m1 + p1 + m2 + p2 + 1; }
  // The label whose cell is sent to (0,0) by the cocharge shift.
  int pivot() const { return m2 + p2 + 1; }
  std::string to_string() const;

  auto operator<=>(const HollowGamma&) const = default;
};

// Detached leg (top down), leg (top down), arm, detached arm. The order fixes
// the sign of the determinant.
LatticeDiagram hollow_cells(const HollowGamma& g);

// gamma[a; b]. Lists shorter than p2+1 (resp. p1+1) are zero-padded; entries
// must be nonnegative and nonincreasing. Slots keep their positions.
LatticeDiagram bracket_diagram(const HollowGamma& g, std::vector<int> a, std::vector<int> b);

// (sum of a, sum of b) over the cells.
std::pair<int, int> diagram_bidegree(const LatticeDiagram& cells);

// det(z_j^{alpha_i}) by permutation sum; zero when two cells coincide.
SparsePoly delta(const LatticeDiagram& cells, int cap_n = 7);

// Sorted cell list "(a,b),(c,d),...".
std::string to_string(const LatticeDiagram& cells);

AFilling cocharge_diagram(const HollowGamma& g, const Tableau& t);

}  // namespace hollowgh
