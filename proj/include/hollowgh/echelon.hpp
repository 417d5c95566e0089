#pragma once

// Fraction-free exact row echelon form over polynomial coefficient vectors.
//
// Rows are primitive integer vectors indexed by monomials; each row's pivot
// is its largest monomial and pivots are pairwise distinct. Inputs are
// cleared of denominators on entry. Optionally every row carries its integer
// combination of the original inputs, which is what makes exact solves and
// dependency certificates possible without leaving the integers.

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "hollowgh/poly.hpp"

namespace hollowgh {

class Echelon {
 public:
  explicit Echelon(int nvars, bool track_combinations = false);

  struct InsertResult {
    bool independent = false;
    // Only filled for a dependent input when tracking: input = sum c_j * input_j.
    std::map<std::size_t, Rational> dependency;
  };

  // Inputs are numbered 0, 1, ... in insertion order, dependent ones included.
  InsertResult insert(const SparsePoly& v);

  std::size_t rank() const { return rows_.size(); }
  std::size_t inputs() const { return input_scale_.size(); }
  bool in_span(const SparsePoly& v) const;

  // Coordinates of v in terms of basis() (row order). nullopt if v is outside the span.
  std::optional<std::vector<Rational>> coordinates(const SparsePoly& v) const;

  // v as a combination of the original inputs. Requires tracking.
  std::optional<std::map<std::size_t, Rational>> express(const SparsePoly& v) const;

  std::vector<SparsePoly> basis() const;

 private:
  using IntVec = std::vector<std::pair<Monomial, Integer>>;  // descending monomials
  using Combo = std::map<std::size_t, Integer>;

  struct Row {
    IntVec vec;
    Combo combo;
  };

  struct Work {
    IntVec vec;
    Combo combo;
    Integer scale = 1;
  };

  static IntVec to_int(const SparsePoly& v, Integer& denominator);
  void reduce(Work& w) const;
  static void normalize(Work& w, bool track);

  int nvars_;
  bool track_;
  std::vector<Row> rows_;
  std::map<Monomial, std::size_t> pivots_;
  std::vector<Integer> input_scale_;
};

}  // namespace hollowgh
