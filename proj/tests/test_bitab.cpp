#include <map>
#include <numeric>
#include <random>
#include <set>

#include "doctest.h"
#include "hollowgh/bitab.hpp"
#include "hollowgh/errors.hpp"
#include "test_support.hpp"

using namespace hollowgh;

namespace {

SparsePoly P(int n, const char* s) { return parse_poly(n, s); }

// Direct oracle: sum over the stabilizer written out independently.
SparsePoly bitableau_oracle(BitabKind kind, const Tableau& s, const AFilling& u) {
  const int n = s.size();
  const auto values = read_by(s, u);  // values[i] is the entry of U at the cell of i+1
  std::vector<int> sigma(static_cast<std::size_t>(n));
  std::iota(sigma.begin(), sigma.end(), 0);
  const auto pos = label_positions(s);
  SparsePoly out(n);
  do {
    bool stabilizes = true;
    for (int i = 0; i < n && stabilizes; ++i) {
      const Cell a = pos[i];
      const Cell b = pos[sigma[i]];
      stabilizes = kind == BitabKind::det ? a.col == b.col : a.row == b.row;
    }
    if (!stabilizes) continue;
    Monomial m;
    for (int i = 0; i < n; ++i) {
      m.x(sigma[i]) = static_cast<std::uint8_t>(values[i].a);
      m.y(sigma[i]) = static_cast<std::uint8_t>(values[i].b);
    }
    const int sign = kind == BitabKind::det ? permutation_sign(sigma) : 1;
    out += SparsePoly::term(n, m, sign);
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return out;
}

SparsePoly reassemble(BitabKind kind, const StraightenResult& r, int n) {
  SparsePoly out(n);
  for (const auto& term : r.terms) out += build_bitableau(kind, term.t, term.v) * term.coefficient;
  return out;
}

}  // namespace

TEST_CASE("bideterminant of the straightening example") {
  const auto s = parse_tableau("2 1 / 3");
  const auto u = parse_afilling("-1 1 / 2");
  CHECK(build_bitableau(BitabKind::det, s, u) == P(3, "x1*y2*x3^2 - x1*y3*x2^2"));
}

TEST_CASE("single cell bitableaux") {
  CHECK(build_bitableau(BitabKind::det, parse_tableau("1"), parse_afilling("(2,3)")) == P(1, "x1^2*y1^3"));
  CHECK(build_bitableau(BitabKind::per, parse_tableau("1"), parse_afilling("-2")) == P(1, "y1^2"));
}

TEST_CASE("bipermanent operator of the six-cell example") {
  const auto t = parse_tableau("1 2 / 3 5 / 4 6");
  const auto c = parse_afilling("-1 0 / 0 1 / 2 2");
  CHECK(build_bitableau(BitabKind::per, t, c) == P(6, "y1 + y2") * P(6, "x3 + x5") * P(6, "2*x4^2*x6^2"));
}

TEST_CASE("build agrees with the stabilizer oracle and its symmetries") {
  std::mt19937 rng(3);
  const auto letters = testsupport::signed_letters(-2, 2);
  for (int n = 1; n <= 5; ++n) {
    for (const auto& shape : partitions_of(n)) {
      for (int i = 0; i < 10; ++i) {
        const auto s = testsupport::random_injective(shape, rng);
        const auto u = testsupport::random_filling(shape, letters, rng);
        CHECK(build_bitableau(BitabKind::det, s, u) == bitableau_oracle(BitabKind::det, s, u));
        CHECK(build_bitableau(BitabKind::per, s, u) == bitableau_oracle(BitabKind::per, s, u));
      }
    }
  }
  // Swapping two labels in a column of S negates the determinant; in a row it fixes the permanent.
  const auto u = parse_afilling("-1 2 / 1");
  CHECK(build_bitableau(BitabKind::det, parse_tableau("1 2 / 3"), u) ==
        -build_bitableau(BitabKind::det, parse_tableau("3 2 / 1"), u));
  CHECK(build_bitableau(BitabKind::per, parse_tableau("1 2 / 3"), parse_afilling("4 4 / 1")) ==
        build_bitableau(BitabKind::per, parse_tableau("2 1 / 3"), parse_afilling("4 4 / 1")));
  CHECK_THROWS(build_bitableau(BitabKind::det, parse_tableau("1 2"), u));
}

TEST_CASE("straightening example") {
  const auto r = straighten(BitabKind::det, parse_tableau("2 1 / 3"), parse_afilling("-1 1 / 2"));
  CHECK_FALSE(r.input_standard);
  CHECK(r.triangular);
  CHECK(r.integral);
  std::map<std::string, Rational> got;
  for (const auto& term : r.terms) got[to_string(term.t) + " | " + to_string(term.v)] = term.coefficient;
  std::map<std::string, Rational> expect;
  expect[to_string(parse_tableau("1 2 / 3")) + " | " + to_string(parse_afilling("-1 1 / 2"))] = 1;
  expect[to_string(parse_tableau("1 3 / 2")) + " | " + to_string(parse_afilling("-1 1 / 2"))] = -1;
  expect[to_string(parse_tableau("1 / 2 / 3")) + " | " + to_string(parse_afilling("-1 / 1 / 2"))] = -1;
  CHECK(got == expect);
}

TEST_CASE("straightening a standard bitableau returns it") {
  const auto t = parse_tableau("1 3 / 2");
  const auto v = parse_afilling("0 0 / 1");
  for (BitabKind kind : {BitabKind::det, BitabKind::per}) {
    const auto r = straighten(kind, t, v);
    CHECK(r.input_standard);
    REQUIRE(r.terms.size() == 1);
    CHECK(r.terms[0].t == t);
    CHECK(r.terms[0].v == v);
    CHECK(r.terms[0].coefficient == 1);
  }
}

TEST_CASE("straightening random inputs at n = 4") {
  std::mt19937 rng(29);
  const auto letters = testsupport::signed_letters(-1, 2);
  for (const auto& shape : partitions_of(4)) {
    for (int i = 0; i < 15; ++i) {
      const auto s = testsupport::random_injective(shape, rng);
      const auto u = testsupport::random_filling(shape, letters, rng);
      for (BitabKind kind : {BitabKind::det, BitabKind::per}) {
        const auto r = straighten(kind, s, u);
        CHECK(reassemble(kind, r, 4) == build_bitableau(kind, s, u));
        CHECK(r.triangular);
        if (kind == BitabKind::det) CHECK(r.integral);
        for (const auto& term : r.terms) CHECK(content(term.v) == content(u));
      }
    }
  }
}

TEST_CASE("bipermanent straightening with a repeated letter needs a half") {
  // The only standard pair of content {a, a} is a single row, whose bipermanent doubles the monomial.
  const auto r = straighten(BitabKind::per, parse_tableau("1 / 2"), parse_afilling("2 / 2"));
  REQUIRE(r.terms.size() == 1);
  CHECK(r.terms[0].coefficient == Rational(1, 2));
  CHECK(to_string(r.terms[0].v) == to_string(parse_afilling("2 2")));
  CHECK_FALSE(r.integral);
  CHECK(r.triangular);
  const auto d = straighten(BitabKind::det, parse_tableau("1 / 2"), parse_afilling("2 / 2"));
  CHECK(d.terms.empty());
  CHECK(d.integral);
}

TEST_CASE("standard bitableaux enumerate standard pairs of a content") {
  const auto all = standard_bitableaux({{0, 1}, {0, 0}, {1, 0}});
  // Distinct letters: the span is the 3! monomials permuting the content.
  CHECK(all.size() == 6);
  for (const auto& b : all) {
    CHECK(is_standard(b.left));
    CHECK(is_column_strict(b.right));
  }
  CHECK(standard_bitableaux({{0, 0}, {0, 0}}).size() == 1);
}

TEST_CASE("cycle notation") {
  CHECK(permutation_from_cycles(6, "(2,3)(4,5)") == std::vector<int>{1, 3, 2, 5, 4, 6});
  CHECK(permutation_from_cycles(4, "(2,4,3)") == std::vector<int>{1, 4, 2, 3});
  CHECK(permutation_from_cycles(3, "") == std::vector<int>{1, 2, 3});
  CHECK_THROWS_AS(permutation_from_cycles(3, "(1,4)"), ParseError);
}

TEST_CASE("E_phi expansion of the six-cell example") {
  const auto t = parse_tableau("1 2 / 3 5 / 4 6");
  const auto c = parse_afilling("-1 0 / 0 1 / 2 2");
  const LatticeDiagram beta{{0, 3}, {0, 1}, {0, 0}, {2, 0}, {3, 0}, {5, 0}};
  const auto d = [&](const char* cyc) { return d_phi(t, c, beta, permutation_from_cycles(6, cyc)); };
  CHECK(d("") == 720);
  CHECK(d("(5,6)") == 720);
  CHECK(d("(2,3)") == 720);
  CHECK(d("(2,3)(5,6)") == 720);
  CHECK(d("(4,5)") == 360);
  CHECK(d("(2,3)(4,5)") == 360);
  CHECK(d("(4,6,5)") == 180);
  CHECK(d("(4,5,6)") == 360);
  CHECK(d("(2,3)(4,6,5)") == 180);
  CHECK(d("(2,3)(4,5,6)") == 360);
  CHECK(d("(1,2,3)") == 240);
  CHECK(d("(1,2,3)(4,5)") == 120);
  CHECK(d("(1,2,3)(4,6)") == 60);
  CHECK(d("(1,2,3)(5,6)") == 240);
  CHECK(d("(1,2,3)(4,6,5)") == 60);
  CHECK(d("(1,2,3)(4,5,6)") == 120);
  for (const char* z : {"(1,2)", "(1,2)(4,5)", "(1,2)(4,6)", "(1,2)(5,6)", "(1,2)(4,6,5)", "(1,2)(4,5,6)"}) {
    CHECK(d(z) == 0);
  }
  // Both falling-factorial products evaluate to 180.
  CHECK(d("(4,6)") == 180);
  CHECK(d("(2,3)(4,6)") == 180);

  const auto ex = per_applied_to_delta(t, c, beta);
  CHECK(ex.iota == permutation_from_cycles(6, "(2,3)(4,5)"));
  CHECK(ex.iota_sign == 1);
  CHECK(ex.terms.size() == 18);  // 24 candidates minus the six with 1 -> 2
  for (const auto& term : ex.terms) {
    CHECK(term.phi[0] != 3);
    CHECK(term.d > 0);
  }
  REQUIRE(ex.terms.front().phi == std::vector<int>{1, 2, 3, 4, 5, 6});
  CHECK(to_string(ex.terms.front().diagram) == to_string(parse_afilling("-2 0 / -1 1 / 1 3")));
  CHECK(to_string(ex.terms.front().diagram.transpose()) == to_string(parse_afilling("-2 -1 1 / 0 1 3")));
  CHECK(ex.value == apply_diff(build_bitableau(BitabKind::per, t, c), delta(beta)));
}

TEST_CASE("E_phi expansion of the four-cell example") {
  const auto t = parse_tableau("1 2 / 3 / 4");
  const auto c = parse_afilling("-1 2 / 0 / 1");
  const LatticeDiagram alpha{{0, 2}, {0, 0}, {1, 0}, {3, 0}};
  const auto ex = per_applied_to_delta(t, c, alpha);
  CHECK(ex.value == P(4, "12*y1*x2 - 12*y2*x1"));
  CHECK(d_phi(t, c, alpha, {1, 2, 3, 4}) == 12);
}

TEST_CASE("E_phi expansion matches direct differentiation") {
  std::mt19937 rng(41);
  for (int n = 2; n <= 4; ++n) {
    const auto syt = enumerate_syt(n);
    for (int trial = 0; trial < 20; ++trial) {
      const auto& tt = syt[rng() % syt.size()];
      std::vector<const Tableau*> same;
      for (const auto& u : syt) {
        if (u.shape() == tt.shape()) same.push_back(&u);
      }
      const auto& u = *same[rng() % same.size()];
      const int pivot = 1 + static_cast<int>(rng() % static_cast<unsigned>(n));
      const auto c = cocharge_diagram(pivot, u);
      LatticeDiagram alpha;
      std::set<std::pair<int, int>> used;
      while (static_cast<int>(alpha.size()) < n) {
        const int v = static_cast<int>(rng() % 9) - 4;
        const ACell cell = ACell::from_signed(v);
        if (used.insert({cell.a, cell.b}).second) alpha.push_back(cell);
      }
      const auto ex = per_applied_to_delta(tt, c, alpha);
      CHECK(ex.value == apply_diff(build_bitableau(BitabKind::per, tt, c), delta(alpha)));
    }
  }
}
