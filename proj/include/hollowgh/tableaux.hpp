#pragma once

// Partitions, fillings over N / A / A', standardization, cocharge diagrams
// and the comparison orders on bitableaux.
//
// Cells are (row, col) with row 0 at the bottom (French convention).

#include <algorithm>
#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hollowgh/errors.hpp"

namespace hollowgh {

// An element (a, b) of N^2. Elements with a == 0 or b == 0 form A, which is
// order-isomorphic to Z via (0,b) -> -b and (a,0) -> a.
struct ACell {
  int a = 0;
  int b = 0;

  static ACell from_signed(int v) { return v >= 0 ? ACell{v, 0} : ACell{0, -v}; }
  bool in_A() const { return a == 0 || b == 0; }
  // Only meaningful on A.
  int signed_value() const { return a - b; }

  // The A' order: compare a - b, then a.
  std::strong_ordering operator<=>(const ACell& o) const {
    if (auto c = (a - b) <=> (o.a - o.b); c != 0) return c;
    return a <=> o.a;
  }
  bool operator==(const ACell&) const = default;
};

std::strong_ordering compare_alphabet(const ACell& u, const ACell& v);

// Unicode form: "0", "2̄" for (0,2), "3̲" for (3,0), "(a,b)" off the axes.
std::string to_string(const ACell& c);
// Accepts the Unicode form, ASCII signed integers and "(a,b)".
ACell parse_acell(std::string_view text);

class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int size() const;
  int length() const { return static_cast<int>(parts_.size()); }
  int operator[](std::size_t i) const { return parts_[i]; }
  Partition transpose() const;
  std::string to_string() const;

  // Lexicographic on the part sequences.
  auto operator<=>(const Partition&) const = default;

 private:
  std::vector<int> parts_;
};

// All partitions of n, in reverse lexicographic order: (n), (n-1,1), ...
std::vector<Partition> partitions_of(int n);
// Number of standard tableaux by the hook length formula.
long long hook_length_count(const Partition& shape);

template <typename T>
class Filling {
 public:
  Filling() = default;
  // rows[0] is the bottom row; row lengths must be weakly decreasing and nonzero.
  explicit Filling(std::vector<std::vector<T>> rows) : rows_(std::move(rows)) {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      if (rows_[r].empty()) throw PreconditionError("filling: empty row " + std::to_string(r));
      if (r > 0 && rows_[r].size() > rows_[r - 1].size()) {
        throw PreconditionError("filling: row " + std::to_string(r) + " longer than the row below");
      }
    }
  }

  const std::vector<std::vector<T>>& rows() const { return rows_; }
  int num_rows() const { return static_cast<int>(rows_.size()); }
  int row_length(int r) const { return static_cast<int>(rows_[r].size()); }
  const T& at(int r, int c) const { return rows_[r][c]; }
  T& at(int r, int c) { return rows_[r][c]; }

  int size() const {
    int s = 0;
    for (const auto& row : rows_) s += static_cast<int>(row.size());
    return s;
  }

  Partition shape() const {
    std::vector<int> p;
    for (const auto& row : rows_) p.push_back(static_cast<int>(row.size()));
    return Partition(std::move(p));
  }

  // Cell positions only; entries are unchanged.
  Filling transpose() const {
    std::vector<std::vector<T>> out;
    if (rows_.empty()) return Filling(std::move(out));
    out.resize(rows_[0].size());
    for (const auto& row : rows_) {
      for (std::size_t c = 0; c < row.size(); ++c) out[c].push_back(row[c]);
    }
    return Filling(std::move(out));
  }

  template <typename F>
  auto map(F&& f) const -> Filling<decltype(f(std::declval<const T&>()))> {
    using U = decltype(f(std::declval<const T&>()));
    std::vector<std::vector<U>> out;
    for (const auto& row : rows_) {
      std::vector<U> r;
      for (const auto& v : row) r.push_back(f(v));
      out.push_back(std::move(r));
    }
    return Filling<U>(std::move(out));
  }

  auto operator<=>(const Filling&) const = default;

 private:
  std::vector<std::vector<T>> rows_;
};

using Tableau = Filling<int>;
using AFilling = Filling<ACell>;

struct Bitableau {
  Tableau left;
  AFilling right;
};

struct Cell {
  int row = 0;
  int col = 0;
  auto operator<=>(const Cell&) const = default;
};

template <typename T>
std::vector<T> rowseq(const Filling<T>& f) {
  std::vector<T> out;
  for (const auto& row : f.rows()) out.insert(out.end(), row.begin(), row.end());
  return out;
}

template <typename T>
std::vector<T> colseq(const Filling<T>& f) {
  std::vector<T> out;
  if (f.num_rows() == 0) return out;
  for (int c = 0; c < f.row_length(0); ++c) {
    for (int r = 0; r < f.num_rows() && c < f.row_length(r); ++r) out.push_back(f.at(r, c));
  }
  return out;
}

template <typename T>
std::vector<T> content(const Filling<T>& f) {
  auto out = rowseq(f);
  std::sort(out.begin(), out.end());
  return out;
}

// Equal values are labelled north first, then west to east.
template <typename T>
Tableau standardize(const Filling<T>& f) {
  std::vector<Cell> cells;
  for (int r = 0; r < f.num_rows(); ++r) {
    for (int c = 0; c < f.row_length(r); ++c) cells.push_back({r, c});
  }
  std::stable_sort(cells.begin(), cells.end(), [&](const Cell& x, const Cell& y) {
    const T& u = f.at(x.row, x.col);
    const T& v = f.at(y.row, y.col);
    if (u < v) return true;
    if (v < u) return false;
    if (x.row != y.row) return x.row > y.row;
    return x.col < y.col;
  });
  auto out = f.map([](const T&) { return 0; });
  for (std::size_t i = 0; i < cells.size(); ++i) out.at(cells[i].row, cells[i].col) = static_cast<int>(i) + 1;
  return out;
}

// Weakly increasing along rows, strictly increasing up columns.
template <typename T>
bool is_column_strict(const Filling<T>& f) {
  for (int r = 0; r < f.num_rows(); ++r) {
    for (int c = 0; c < f.row_length(r); ++c) {
      if (c > 0 && f.at(r, c) < f.at(r, c - 1)) return false;
      if (r > 0 && !(f.at(r - 1, c) < f.at(r, c))) return false;
    }
  }
  return true;
}

bool is_standard(const Tableau& t);

// Position of each label: result[i - 1] is the cell holding i. Requires an
// injective filling by 1..n.
std::vector<Cell> label_positions(const Tableau& t);

// u^T_i for i = 1..n (0-based vector): the entry of U in the cell holding i in T.
template <typename T>
std::vector<T> read_by(const Tableau& t, const Filling<T>& u) {
  if (t.shape() != u.shape()) throw PreconditionError("read_by: shapes differ");
  auto pos = label_positions(t);
  std::vector<T> out;
  out.reserve(pos.size());
  for (const auto& p : pos) out.push_back(u.at(p.row, p.col));
  return out;
}

// Standard tableaux of the given shape, or of every shape of size n. The
// output is sorted lexicographically on row reading words.
std::vector<Tableau> enumerate_syt(int n, const std::optional<Partition>& shape = std::nullopt,
                                   int cap_n = 7);

Tableau cocharge_pi(const Tableau& t);

// h o pi with the cell of `pivot` sent to (0,0). `pivot` is 1-based.
AFilling cocharge_diagram(int pivot, const Tableau& t);

struct Decomposition {
  AFilling cochg;            // cochg(std(U))
  std::vector<ACell> alpha;  // alpha_i = u_i - c_i
};

// Splits a column-strict A-filling with u_pivot = (0,0). Throws
// PreconditionError naming the failing index.
Decomposition decompose_columnstrict(int pivot, const AFilling& u);

// Inverse of decompose_columnstrict for T standard and alpha weakly increasing
// in A with alpha_pivot = (0,0).
AFilling compose_columnstrict(int pivot, const Tableau& t, const std::vector<ACell>& alpha);

enum class OrderMode { det, per, bitab };

// Strong orders on bitableaux. `pivot` is only read in bitab mode.
std::strong_ordering compare_bitableaux(const Bitableau& a, const Bitableau& b, OrderMode mode,
                                        int pivot = 0);

// Bracket parameters (a; b) ordered lexicographically on a, then b.
std::strong_ordering compare_content(const std::vector<int>& a1, const std::vector<int>& b1,
                                     const std::vector<int>& a2, const std::vector<int>& b2);

// Rows bottom to top separated by " / ", entries separated by spaces.
std::string to_string(const Tableau& t);
std::string to_string(const AFilling& u);
Tableau parse_tableau(std::string_view text);
AFilling parse_afilling(std::string_view text);

}  // namespace hollowgh
