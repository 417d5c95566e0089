#include "hollowgh/latticediag.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>

#include "hollowgh/errors.hpp"

namespace hollowgh {

HollowGamma HollowGamma::parse(std::string_view text) {
  int vals[6];
  std::size_t i = 0;
  for (int f = 0; f < 6; ++f) {
    if (f > 0) {
      const char sep = (f % 2 == 0) ? ':' : ',';
      if (i >= text.size() || text[i] != sep) throw ParseError(i, std::string("expected '") + sep + "'");
      ++i;
    }
    const std::size_t start = i;
    long v = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      v = v * 10 + (text[i] - '0');
      if (v > 1000) throw ParseError(start, "parameter too large");
      ++i;
    }
    if (i == start) throw ParseError(i, "expected a nonnegative integer");
    vals[f] = static_cast<int>(v);
  }
  if (i != text.size()) throw ParseError(i, "trailing characters");
  HollowGamma g{vals[0], vals[1], vals[2], vals[3], vals[4], vals[5]};
  g.validate();
  return g;
}

void HollowGamma::validate() const {
  if (m1 < 1) throw PreconditionError("gamma: m1 >= 1 violated");
  if (m2 < 1) throw PreconditionError("gamma: m2 >= 1 violated");
  if (p1 < 0) throw PreconditionError("gamma: p1 >= 0 violated");
  if (p2 < 0) throw PreconditionError("gamma: p2 >= 0 violated");
  if (k1 < (p1 > 0 ? 1 : 0)) throw PreconditionError(p1 > 0 ? "gamma: k1 >= 1 violated (p1 > 0)" : "gamma: k1 >= 0 violated");
  if (k2 < (p2 > 0 ? 1 : 0)) throw PreconditionError(p2 > 0 ? "gamma: k2 >= 1 violated (p2 > 0)" : "gamma: k2 >= 0 violated");
}

std::string HollowGamma::to_string() const {
  auto s = [](int v) { return std::to_string(v); };
  return s(m1) + "," + s(m2) + ":" + s(k1) + "," + s(k2) + ":" + s(p1) + "," + s(p2);
}

LatticeDiagram hollow_cells(const HollowGamma& g) {
  return bracket_diagram(g, {}, {});
}

LatticeDiagram bracket_diagram(const HollowGamma& g, std::vector<int> a, std::vector<int> b) {
  g.validate();
  auto check = [](std::vector<int>& v, int len, const char* name) {
    if (static_cast<int>(v.size()) > len) {
      throw PreconditionError(std::string("bracket: list ") + name + " longer than " + std::to_string(len));
    }
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (v[i] < 0) throw PreconditionError(std::string("bracket: negative entry in ") + name);
      if (i > 0 && v[i] > v[i - 1]) throw PreconditionError(std::string("bracket: ") + name + " is not nonincreasing");
    }
    v.resize(len, 0);
  };
  check(a, g.p2 + 1, "a");
  check(b, g.p1 + 1, "b");
  LatticeDiagram cells;
  cells.reserve(g.n());
  for (int i = g.p2; i >= 0; --i) {
    const int y = g.m2 + g.k2 - 1 + i - a[i];
    if (y < 0) throw PreconditionError("bracket: a[" + std::to_string(i) + "] slides past the origin");
    cells.push_back(ACell{0, y});
  }
  for (int y = g.m2 - 1; y >= 0; --y) cells.push_back(ACell{0, y});
  for (int x = 1; x < g.m1; ++x) cells.push_back(ACell{x, 0});
  for (int j = 0; j <= g.p1; ++j) {
    const int x = g.m1 + g.k1 - 1 + j - b[j];
    if (x < 0) throw PreconditionError("bracket: b[" + std::to_string(j) + "] slides past the origin");
    cells.push_back(ACell{x, 0});
  }
  return cells;
}

std::pair<int, int> diagram_bidegree(const LatticeDiagram& cells) {
  int r = 0, s = 0;
  for (const auto& c : cells) {
    r += c.a;
    s += c.b;
  }
  return {r, s};
}

SparsePoly delta(const LatticeDiagram& cells, int cap_n) {
  const int n = static_cast<int>(cells.size());
  if (n > cap_n) throw ResourceError("delta: n = " + std::to_string(n) + " exceeds cap " + std::to_string(cap_n));
  if (n > kMaxVars) throw ResourceError("delta: n exceeds the supported variable count");
  std::set<std::pair<int, int>> distinct;
  for (const auto& c : cells) {
    if (c.a < 0 || c.b < 0) throw PreconditionError("delta: cells must lie in N^2");
    if (c.a > 255 || c.b > 255) throw ResourceError("delta: exponent exceeds 255");
    distinct.insert({c.a, c.b});
  }
  SparsePoly out(n);
  if (static_cast<int>(distinct.size()) < n) return out;
  std::vector<int> sigma(n);
  std::iota(sigma.begin(), sigma.end(), 0);
  TermAccumulator acc(n);
  do {
    Monomial m;
    for (int i = 0; i < n; ++i) {
      m.x(sigma[i]) = static_cast<std::uint8_t>(cells[i].a);
      m.y(sigma[i]) = static_cast<std::uint8_t>(cells[i].b);
    }
    acc.add(m, permutation_sign(sigma));
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return acc.finish();
}

std::string to_string(const LatticeDiagram& cells) {
  std::vector<std::pair<int, int>> sorted;
  for (const auto& c : cells) sorted.emplace_back(c.a, c.b);
  std::sort(sorted.begin(), sorted.end());
  std::string out;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (i > 0) out += ',';
    out += "(" + std::to_string(sorted[i].first) + "," + std::to_string(sorted[i].second) + ")";
  }
  return out;
}

AFilling cocharge_diagram(const HollowGamma& g, const Tableau& t) {
  if (t.size() != g.n()) {
    throw PreconditionError("cocharge_diagram: tableau has " + std::to_string(t.size()) + " cells, gamma needs " +
                            std::to_string(g.n()));
  }
  return cocharge_diagram(g.pivot(), t);
}

}  // namespace hollowgh
