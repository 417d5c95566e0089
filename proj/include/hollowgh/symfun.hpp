#pragma once

// Symmetric polynomials, domino tabloid counts, the h-to-e change of basis,
// maximal types, and one- and two-variable series tables.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hollowgh/poly.hpp"
#include "hollowgh/tableaux.hpp"

namespace hollowgh {

enum class Vars { X, Y };

SparsePoly elementary(int n, int r, Vars v = Vars::X);
SparsePoly complete(int n, int r, Vars v = Vars::X);
// Sum over distinct permutations of lambda padded with zeros to length n.
SparsePoly monomial_symmetric(int n, const Partition& lambda, Vars v = Vars::X);
// Sum of z^delta over distinct rearrangements delta of beta in (A')^n.
SparsePoly macmahon(const std::vector<ACell>& beta);
// h_{q_1} h_{q_2} ... in one variable set.
SparsePoly complete_product(int n, const std::vector<int>& q, Vars v = Vars::X);

// Number of domino tabloids of shape lambda and type mu: ways to tile each row
// of lambda by an ordered sequence of horizontal dominoes whose lengths, over
// all rows, form the multiset mu. Returns 0 when the sizes differ.
Integer domino_count(const Partition& lambda, const Partition& mu);

// Coefficient of e_mu in h_lambda: (-1)^{|mu| - l(mu)} d_{lambda,mu}.
Integer h_to_e_coefficient(const Partition& lambda, const Partition& mu);

// All nonzero (mu, coefficient) of h_lambda in the e basis, mu in reverse
// lexicographic order. Throws ResourceError when |lambda| > cap.
std::vector<std::pair<Partition, Integer>> h_to_e_expand(const Partition& lambda, int cap = 8);

// L(lambda) for a given p1.
Partition max_type(const Partition& lambda, int p1);
// Recovers lambda from L(lambda) when every part lies in [k1, k1 + p1].
Partition max_type_inverse(const Partition& type, int k1, int p1);

// Bigraded table of integer coefficients c_{r,s} t^r q^s. Zero entries are
// never stored.
class SeriesTable {
 public:
  using Key = std::pair<int, int>;

  SeriesTable() = default;
  static SeriesTable one() { return monomial(0, 0); }
  static SeriesTable monomial(int r, int s, const Integer& c = 1);

  const std::map<Key, Integer>& entries() const { return entries_; }
  Integer at(int r, int s) const;
  void add(int r, int s, const Integer& c);
  bool is_zero() const { return entries_.empty(); }

  SeriesTable operator*(const SeriesTable& o) const;
  SeriesTable operator+(const SeriesTable& o) const;
  SeriesTable& operator+=(const SeriesTable& o);
  bool operator==(const SeriesTable& o) const { return entries_ == o.entries_; }

  // Keeps entries with r <= R and s <= S.
  SeriesTable truncated(int R, int S) const;
  // Value at t = q = 1.
  Integer total() const;
  // Exact product truncated at (R, S) without forming the full product.
  SeriesTable times_truncated(const SeriesTable& o, int R, int S) const;

  // Sorted [r, s, c] triples.
  std::string to_json() const;
  // e.g. "1 + 2t + 2q + tq".
  std::string to_string() const;

 private:
  std::map<Key, Integer> entries_;
};

// (v)_j = (1 - v)(1 - v^2)...(1 - v^j) in t (Vars::X) or q (Vars::Y).
SeriesTable rising_factorial(int j, Vars v = Vars::X);
// [n choose k]_v by exact division of rising factorials.
SeriesTable gaussian_binomial(int n, int k, Vars v = Vars::X);
// 1 / (v)_j expanded up to degree `max_degree`.
SeriesTable inverse_rising(int j, int max_degree, Vars v = Vars::X);

Integer binomial(int n, int k);
Integer factorial(int n);

}  // namespace hollowgh
