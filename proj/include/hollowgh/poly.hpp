#pragma once

// Exact sparse polynomials in x_1..x_n, y_1..y_n with rational coefficients.

#include <gmpxx.h>

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace hollowgh {

using Rational = mpq_class;
using Integer = mpz_class;

inline constexpr int kMaxVars = 8;

// Exponent vector (xexp, yexp). Unused slots beyond the ring's n stay zero.
// The defaulted comparison is lexicographic on xexp then yexp.
struct Monomial {
  std::array<std::uint8_t, 2 * kMaxVars> exps{};

  std::uint8_t x(int i) const { return exps[i]; }
  std::uint8_t y(int i) const { return exps[kMaxVars + i]; }
  std::uint8_t& x(int i) { return exps[i]; }
  std::uint8_t& y(int i) { return exps[kMaxVars + i]; }

  int xdeg() const;
  int ydeg() const;

  // True when every exponent of `other` is at most the matching one here.
  bool divisible_by(const Monomial& other) const;

  auto operator<=>(const Monomial&) const = default;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

class SparsePoly {
 public:
  using TermMap = std::map<Monomial, Rational>;

  explicit SparsePoly(int nvars = 0);

  static SparsePoly constant(int nvars, const Rational& c);
  static SparsePoly term(int nvars, const Monomial& m, const Rational& c = 1);
  // Variables are 1-based to match the usual x1..xn naming.
  static SparsePoly x(int nvars, int i);
  static SparsePoly y(int nvars, int i);

  int nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(const Monomial& m) const;

  // Adds c*m, dropping the term if it cancels.
  void add_term(const Monomial& m, const Rational& c);

  SparsePoly& operator+=(const SparsePoly& o);
  SparsePoly& operator-=(const SparsePoly& o);
  SparsePoly& operator*=(const Rational& c);

  friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
  friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }
  friend SparsePoly operator*(SparsePoly a, const Rational& c) { return a *= c; }
  friend SparsePoly operator*(const Rational& c, SparsePoly a) { return a *= c; }
  friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b);
  SparsePoly operator-() const;

  bool operator==(const SparsePoly& o) const;

  // The set of bidegrees carried by the terms, sorted.
  std::vector<std::pair<int, int>> bidegrees() const;
  bool is_bihomogeneous() const { return bidegrees().size() <= 1; }

  // Diagonal S_n action: variable i (0-based) is sent to sigma[i].
  SparsePoly permuted(std::span<const int> sigma) const;

  // Renders terms in descending monomial order, e.g. "x1^2 - 2*x1*x2 + x2^2".
  std::string to_string() const;

 private:
  friend class TermAccumulator;
  int nvars_;
  TermMap terms_;
};

// Hash-based accumulation for hot loops; finish() yields the canonical map.
class TermAccumulator {
 public:
  explicit TermAccumulator(int nvars) : nvars_(nvars) {}
  void add(const Monomial& m, const Rational& c);
  SparsePoly finish();

 private:
  int nvars_;
  std::unordered_map<Monomial, Rational, MonomialHash> pending_;
};

enum class ArithKind { add, mul, scale };

// Generic entry point; `c` is only read for scale (q is ignored there).
SparsePoly arith(const SparsePoly& p, const SparsePoly& q, ArithKind kind,
                 const Rational& c = 1);

// P(dX, dY) applied to f.
SparsePoly apply_diff(const SparsePoly& op, const SparsePoly& f);

// d/dx_i or d/dy_i (0-based i).
SparsePoly diff_x(const SparsePoly& f, int i);
SparsePoly diff_y(const SparsePoly& f, int i);

SparsePoly bigraded_component(const SparsePoly& p, int r, int s);
std::map<std::pair<int, int>, SparsePoly> bigraded_decomposition(const SparsePoly& p);

// Parses sums of terms like "12*y1*x2 - 3/2*x1^2*y3 + 1". `nvars` fixes n;
// variable indices beyond it are rejected.
SparsePoly parse_poly(int nvars, std::string_view text);

// Falling factorial a*(a-1)*...*(a-k+1); zero when k > a.
Integer falling_factorial(int a, int k);

// Sign of a permutation given in one-line notation over 0..n-1.
int permutation_sign(std::span<const int> perm);

}  // namespace hollowgh
