#pragma once

// Hollow Garsia-Haiman modules: ideal generators, bases, Hilbert series
// (closed form, harmonic-space brute force, quotient brute force), the
// independence and annihilation verifications, and graded characters.
//
// The quotient by I_gamma is modelled by the span of all partial derivatives
// of Delta_gamma, so every ideal-theoretic claim becomes an exact rank
// statement per bidegree.

#include <cstddef>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hollowgh/echelon.hpp"
#include "hollowgh/latticediag.hpp"
#include "hollowgh/poly.hpp"
#include "hollowgh/symfun.hpp"
#include "hollowgh/tableaux.hpp"

namespace hollowgh {

struct Caps {
  int n = 6;
  std::size_t basis = 2000;
};

enum class IdealLevel { G, H, J, K };
IdealLevel parse_level(std::string_view text);
std::string to_string(IdealLevel level);

struct NamedPoly {
  std::string name;
  SparsePoly poly;
};

// G: x_i y_i and square-free products of m1+p1+1 x's / m2+p2+1 y's.
// H: adds e_{p1+2..p1+m1}(X), e_{p2+2..p2+m2}(Y).
// J: adds h_{k1..k1+p1}(X), h_{k2..k2+p2}(Y).
// K: adds every h_{k1+i}(X), h_{k2+i}(Y) of degree at most the total degree of Delta.
std::vector<NamedPoly> ideal_generators(const HollowGamma& g, IdealLevel level);

enum class BasisKind { B, BB, EEB };

struct BasisElement {
  BasisKind kind = BasisKind::B;
  Tableau t;               // left tableau
  Tableau u;               // V = cochg(U)
  AFilling v;
  std::vector<int> qx;     // BB: h indices; EEB: exponents of e_1, e_2, ... in X
  std::vector<int> qy;
  int xdeg = 0;            // bidegree of the whole element
  int ydeg = 0;
};

// (|X(V)|, |Y(V)|).
std::pair<int, int> stats(const BasisElement& b);
SparsePoly basis_poly(const BasisElement& b);
std::string to_string(const BasisElement& b);

// Nonincreasing p-tuples with entries in 0..k.
std::vector<std::vector<int>> qset(int k, int p);

std::vector<BasisElement> basis_B(const HollowGamma& g, const Caps& caps = {});
std::vector<BasisElement> basis_BB(const HollowGamma& g, const Caps& caps = {});
// Elements of bidegree at most (R, S).
std::vector<BasisElement> basis_EEB(const HollowGamma& g, int R, int S, const Caps& caps = {});

// Sum over B_gamma of t^|X(b)| q^|Y(b)|.
SeriesTable b_sum(const HollowGamma& g);
// Gaussian factors times b_sum.
SeriesTable hilbert_closed(const HollowGamma& g);
// b_sum over (t)_{m1+p1} (q)_{m2+p2}, truncated at (R, S).
SeriesTable hilbert_G(const HollowGamma& g, int R, int S);
// b_sum over (t)_{p1+1} (q)_{p2+1}, truncated at (R, S).
SeriesTable hilbert_H(const HollowGamma& g, int R, int S);
// Expected |BB_gamma| = n! C(p1+k1, p1+1) C(p2+k2, p2+1).
Integer expected_total(const HollowGamma& g);

// Derivative span of Delta_gamma, one echelon basis per bidegree.
struct HarmonicSpace {
  int n = 0;
  std::pair<int, int> top{0, 0};
  SparsePoly delta;
  std::map<std::pair<int, int>, std::vector<SparsePoly>> bases;
  SeriesTable series() const;
};

HarmonicSpace harmonic_space(const HollowGamma& g, const Caps& caps = {});
SeriesTable harmonic_series(const HollowGamma& g, const Caps& caps = {});

// C[X,Y] / (generators) by linear algebra on standard monomials.
class QuotientModel {
 public:
  QuotientModel(int n, const std::vector<NamedPoly>& generators);

  // Dimension of the quotient at bidegree (r, s).
  long long dimension(int r, int s);
  // Number of the given bihomogeneous (r, s) elements that are linearly
  // independent modulo the ideal.
  long long independent_count(int r, int s, const std::vector<SparsePoly>& elements);
  // True when the elements together with the ideal span the whole (r, s) component.
  bool spans(int r, int s, const std::vector<SparsePoly>& elements);
  // Drops terms lying in the monomial part of the ideal.
  SparsePoly reduce(const SparsePoly& f) const;

 private:
  const Echelon& ideal_span(int r, int s);
  std::vector<Monomial> standard_monomials(int r, int s) const;

  int n_;
  std::vector<Monomial> monomial_gens_;
  std::vector<SparsePoly> other_gens_;
  std::map<std::pair<int, int>, Echelon> spans_;
};

SeriesTable quotient_series(const HollowGamma& g, IdealLevel level, int R, int S);

struct Report {
  std::string gamma;
  std::string level;
  SeriesTable series;
  long long rank = 0;
  long long expected = 0;
  bool pass = false;
  std::vector<std::string> details;

  // Keys sorted: details, expected, gamma, level, pass, rank, series.
  std::string to_json() const;
};

// Applies every BB element to Delta_gamma and checks full rank and agreement
// with the harmonic series per bidegree. `series` holds BB counts.
Report verify_independence(const HollowGamma& g, const Caps& caps = {});

// G/H/J generators annihilate Delta; h_j lowering for j < k; h_{k+i} gives 0.
// `rank` counts passing identities out of `expected`.
Report annihilation_check(const HollowGamma& g, const Caps& caps = {});

// EEB elements up to (R, S) form a basis of the G-quotient component by component.
Report eeb_check(const HollowGamma& g, int R, int S, const Caps& caps = {});
// e-power prefixes (G level) or h-products of the J range (H level) times
// B_gamma are linearly independent modulo that level up to (R, S).
Report algebraic_independence_check(const HollowGamma& g, IdealLevel level, int R, int S, const Caps& caps = {});

// Murnaghan-Nakayama character value chi^lambda at cycle type mu.
Integer sn_character(const Partition& lambda, const Partition& mu);
// Size of the conjugacy class of cycle type mu.
Integer class_size(const Partition& mu);
// A permutation (0-based one-line) of cycle type mu.
std::vector<int> cycle_type_representative(const Partition& mu);

enum class CharacterMode { bruteforce, formula };
using CharacterSeries = std::map<Partition, SeriesTable>;

// Multiplicity series of each irreducible. Brute force requires n <= 5.
CharacterSeries graded_character(const HollowGamma& g, CharacterMode mode, const Caps& caps = {});

}  // namespace hollowgh
