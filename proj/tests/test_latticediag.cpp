#include <algorithm>
#include <numeric>

#include "doctest.h"
#include "hollowgh/errors.hpp"
#include "hollowgh/latticediag.hpp"
#include "hollowgh/symfun.hpp"

using namespace hollowgh;

namespace {

LatticeDiagram xaxis(std::initializer_list<int> v) {
  LatticeDiagram out;
  for (int a : v) out.push_back({a, 0});
  return out;
}

const char* const kGammas[] = {"1,1:1,1:0,0", "1,1:2,1:1,0", "2,1:1,1:0,0", "1,2:1,2:0,1"};

}  // namespace

TEST_CASE("gamma parsing and validation") {
  const auto g = HollowGamma::parse("4,2:3,2:5,2");
  CHECK(g.m1 == 4);
  CHECK(g.k2 == 2);
  CHECK(g.p1 == 5);
  CHECK(g.n() == 14);
  CHECK(hollow_cells(g).size() == 14);
  CHECK(g.to_string() == "4,2:3,2:5,2");
  try {
    HollowGamma::parse("1,1;1,1:0,0");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 3);
  }
  CHECK_THROWS_AS(HollowGamma::parse("1,1:1,1:0,0x"), ParseError);
  CHECK_THROWS_AS(HollowGamma::parse("1,1:1,1:0"), ParseError);
  CHECK_THROWS_WITH_AS(HollowGamma::parse("0,1:1,1:0,0"), doctest::Contains("m1"), PreconditionError);
  CHECK_THROWS_WITH_AS(HollowGamma::parse("1,1:0,1:1,0"), doctest::Contains("k1"), PreconditionError);
  CHECK_NOTHROW(HollowGamma::parse("1,1:0,1:0,0"));
}

TEST_CASE("hollow cells follow the parametrization") {
  CHECK(hollow_cells(HollowGamma::parse("1,1:1,1:0,0")) == LatticeDiagram{{0, 1}, {0, 0}, {1, 0}});
  CHECK(hollow_cells(HollowGamma::parse("1,1:2,1:1,0")) == LatticeDiagram{{0, 1}, {0, 0}, {2, 0}, {3, 0}});
  CHECK(hollow_cells(HollowGamma::parse("2,3:2,2:1,1")) ==
        LatticeDiagram{{0, 5}, {0, 4}, {0, 2}, {0, 1}, {0, 0}, {1, 0}, {3, 0}, {4, 0}});
}

TEST_CASE("bracket diagrams") {
  const auto g = HollowGamma::parse("2,1:6,3:2,2");
  CHECK(bracket_diagram(g, {2, 1}, {4, 4, 3}) ==
        LatticeDiagram{{0, 5}, {0, 3}, {0, 1}, {0, 0}, {1, 0}, {3, 0}, {4, 0}, {6, 0}});
  CHECK(bracket_diagram(g, {0, 0, 0}, {0, 0, 0}) == hollow_cells(g));
  CHECK(bracket_diagram(g, {}, {}) == hollow_cells(g));
  for (int j = 0; j <= 6; ++j) {
    auto expect = hollow_cells(g);
    expect[5].a -= j;
    CHECK(bracket_diagram(g, {}, {j}) == expect);
  }
  CHECK_THROWS_AS(bracket_diagram(g, {1, 2}, {}), PreconditionError);
  CHECK_THROWS_AS(bracket_diagram(g, {}, {1, 1, 1, 1}), PreconditionError);
  CHECK_THROWS_AS(bracket_diagram(g, {-1}, {}), PreconditionError);
}

TEST_CASE("bracket diagrams keep the sign of the determinant") {
  const auto g = HollowGamma::parse("1,1:3,2:1,1");
  const auto base = delta(hollow_cells(g));
  // The identity permutation contributes prod z_i^{alpha_i} with coefficient +1.
  for (const auto& [a, b] : std::vector<std::pair<std::vector<int>, std::vector<int>>>{
           {{0}, {1}}, {{1}, {2, 1}}, {{1, 1}, {2, 2}}, {{1}, {0}}}) {
    const auto cells = bracket_diagram(g, a, b);
    Monomial diag;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      diag.x(static_cast<int>(i)) = static_cast<std::uint8_t>(cells[i].a);
      diag.y(static_cast<int>(i)) = static_cast<std::uint8_t>(cells[i].b);
    }
    CHECK(delta(cells).coefficient(diag) == 1);
  }
  CHECK_FALSE(base.is_zero());
}

TEST_CASE("delta: small determinants") {
  CHECK(delta({{0, 0}}) == SparsePoly::constant(1, 1));
  CHECK(delta({{0, 0}, {1, 0}}) == SparsePoly::x(2, 2) - SparsePoly::x(2, 1));
  CHECK(delta({{0, 1}, {2, 0}, {0, 1}}).is_zero());
  CHECK_THROWS_AS(delta(xaxis({0, 1, 2, 3, 4, 5, 6, 7}), 7), ResourceError);
}

TEST_CASE("delta: alternation and term counts") {
  for (const char* gs : kGammas) {
    const auto g = HollowGamma::parse(gs);
    auto cells = hollow_cells(g);
    const auto d = delta(cells);
    long long fact = 1;
    for (int i = 2; i <= g.n(); ++i) fact *= i;
    CHECK(static_cast<long long>(d.size()) == fact);
    const auto [r, s] = diagram_bidegree(cells);
    CHECK(d.bidegrees() == std::vector<std::pair<int, int>>{{r, s}});
    std::swap(cells[0], cells[1]);
    CHECK(delta(cells) == -d);
    std::vector<int> sigma(static_cast<std::size_t>(g.n()));
    std::iota(sigma.begin(), sigma.end(), 0);
    do {
      CHECK(d.permuted(sigma) == d * Rational(permutation_sign(sigma)));
    } while (std::next_permutation(sigma.begin(), sigma.end()) && g.n() <= 4);
  }
}

TEST_CASE("e_2(dY) slides two leg cells down") {
  const LatticeDiagram before{{0, 5}, {0, 4}, {0, 3}, {0, 0}, {1, 0}};
  const LatticeDiagram after{{0, 5}, {0, 3}, {0, 2}, {0, 0}, {1, 0}};
  CHECK(apply_diff(elementary(5, 2, Vars::Y), delta(before)) == delta(after) * Rational(12));
}

TEST_CASE("h_3 h_2(dX) on a seven-cell x-axis diagram") {
  const auto lhs = apply_diff(complete_product(7, {3, 2}, Vars::X), delta(xaxis({0, 1, 2, 3, 9, 10, 11})));
  const auto rhs = delta(xaxis({0, 1, 2, 3, 5, 9, 11})) * Rational(30240) +
                   delta(xaxis({0, 1, 2, 3, 4, 10, 11})) * Rational(15120) +
                   delta(xaxis({0, 1, 2, 3, 6, 8, 11})) * Rational(45360);
  CHECK(lhs == rhs);
  // Two of the raw terms differ by a transposition of cells and cancel.
  CHECK((delta(xaxis({0, 1, 2, 3, 7, 9, 10})) + delta(xaxis({0, 1, 2, 3, 9, 7, 10}))).is_zero());
}

TEST_CASE("h_k(dX) kills the smallest hollow determinant") {
  const auto g = HollowGamma::parse("1,1:1,1:0,0");
  CHECK(apply_diff(complete(3, 1, Vars::X), delta(hollow_cells(g))).is_zero());
  CHECK(delta(bracket_diagram(g, {}, {1})).is_zero());
}

TEST_CASE("degenerate k = 0 gives a zero determinant") {
  CHECK(delta(hollow_cells(HollowGamma::parse("1,1:0,1:0,0"))).is_zero());
}

TEST_CASE("cell list rendering") {
  CHECK(to_string(LatticeDiagram{{1, 0}, {0, 1}, {0, 0}}) == "(0,0),(0,1),(1,0)");
}
