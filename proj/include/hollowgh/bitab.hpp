#pragma once

// Bideterminants and bipermanents of bitableaux, straightening into the
// standard basis, and the expansion of a bipermanent operator applied to a
// lattice determinant.

#include <vector>

#include "hollowgh/latticediag.hpp"
#include "hollowgh/poly.hpp"
#include "hollowgh/tableaux.hpp"

namespace hollowgh {

enum class BitabKind { det, per };

// [S,U]_det sums over the column stabilizer of S with signs, [S,U]_per over
// the row stabilizer without. S must hold each of 1..n exactly once.
SparsePoly build_bitableau(BitabKind kind, const Tableau& s, const AFilling& u);

struct StraightenTerm {
  Tableau t;
  AFilling v;
  Rational coefficient;
};

struct StraightenResult {
  std::vector<StraightenTerm> terms;  // sorted ascending in the matching order
  bool input_standard = false;
  // Every term is strictly greater than the input (vacuous for standard input).
  bool triangular = false;
  // All coefficients are integers. Bipermanents with a repeated letter can fail this.
  bool integral = false;
};

// Expands [S,U] in the standard bitableaux (T,V) with kappa(V) = kappa(U).
// Re-evaluation is checked and a failure raises ConsistencyError.
StraightenResult straighten(BitabKind kind, const Tableau& s, const AFilling& u);

// All standard bitableaux on n cells whose right side has the given content.
std::vector<Bitableau> standard_bitableaux(const std::vector<ACell>& content_multiset);

struct EPhiTerm {
  std::vector<int> phi;  // one-line notation over 1..n
  int phi_sign = 1;
  AFilling diagram;      // E_phi, shaped like T
  Integer d;
};

struct PerDeltaExpansion {
  std::vector<int> iota;  // one-line notation over 1..n
  int iota_sign = 1;
  std::vector<EPhiTerm> terms;  // only d_phi > 0, phi in lexicographic order
  SparsePoly value;
};

// [T,C]_per(dX,dY) Delta_alpha assembled from the E_phi diagrams.
PerDeltaExpansion per_applied_to_delta(const Tableau& t, const AFilling& c, const LatticeDiagram& alpha,
                                       int cap_n = 7);

// d_phi for a single phi (one-line over 1..n); 0 under the vanishing convention.
Integer d_phi(const Tableau& t, const AFilling& c, const LatticeDiagram& alpha, const std::vector<int>& phi);

// Converts cycle notation such as "(1,2,3)(4,5)" on 1..n to one-line notation.
std::vector<int> permutation_from_cycles(int n, const std::string& cycles);

}  // namespace hollowgh
