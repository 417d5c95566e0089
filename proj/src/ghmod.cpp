#include "hollowgh/ghmod.hpp"

#include <algorithm>
#include <functional>

#include "json.hpp"

#include "hollowgh/bitab.hpp"
#include "hollowgh/errors.hpp"

namespace hollowgh {

namespace {

std::string poly_name(const char* family, int j, Vars v) {
  return std::string(family) + "_" + std::to_string(j) + (v == Vars::X ? "(X)" : "(Y)");
}

void check_n_cap(const HollowGamma& g, const Caps& caps) {
  g.validate();
  if (g.n() > caps.n) {
    throw ResourceError("n = " + std::to_string(g.n()) + " exceeds cap " + std::to_string(caps.n));
  }
  if (g.n() > kMaxVars) throw ResourceError("n exceeds the supported variable count");
}

// Square-free products of `size` variables of one set.
void add_squarefree(std::vector<NamedPoly>& out, int n, int size, Vars v) {
  if (size > n) return;
  std::vector<bool> pick(n, false);
  std::fill(pick.begin(), pick.begin() + size, true);
  do {
    Monomial m;
    std::string name;
    for (int i = 0; i < n; ++i) {
      if (!pick[i]) continue;
      (v == Vars::X ? m.x(i) : m.y(i)) = 1;
      if (!name.empty()) name += "*";
      name += (v == Vars::X ? "x" : "y") + std::to_string(i + 1);
    }
    out.push_back({"G: " + name, SparsePoly::term(n, m)});
  } while (std::prev_permutation(pick.begin(), pick.end()));
}

// All compositions of `total` into `parts` nonnegative pieces.
void for_each_composition(int total, int parts, const std::function<void(const std::vector<int>&)>& f) {
  std::vector<int> cur(parts, 0);
  std::function<void(int, int)> rec = [&](int i, int rest) {
    if (i == parts - 1) {
      cur[i] = rest;
      f(cur);
      return;
    }
    for (int e = rest; e >= 0; --e) {
      cur[i] = e;
      rec(i + 1, rest - e);
    }
  };
  if (parts == 0) {
    if (total == 0) f(cur);
    return;
  }
  rec(0, total);
}

// Exponent vectors eps (for e_1..e_len) with sum (i+1) eps_i <= budget.
void for_each_weighted(int len, int budget, const std::function<void(const std::vector<int>&, int)>& f) {
  std::vector<int> cur(len, 0);
  std::function<void(int, int)> rec = [&](int i, int used) {
    if (i == len) {
      f(cur, used);
      return;
    }
    for (int e = 0; used + e * (i + 1) <= budget; ++e) {
      cur[i] = e;
      rec(i + 1, used + e * (i + 1));
    }
    cur[i] = 0;
  };
  rec(0, 0);
}

// Multisets of parts from [lo, hi] (nonincreasing lists) with sum <= budget.
void for_each_parts_in_range(int lo, int hi, int budget,
                             const std::function<void(const std::vector<int>&, int)>& f) {
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int max_part, int used) {
    f(cur, used);
    for (int p = std::min(max_part, budget - used); p >= lo; --p) {
      cur.push_back(p);
      rec(p, used + p);
      cur.pop_back();
    }
  };
  if (lo < 1) throw PreconditionError("part range must start at 1 or more");
  rec(hi, 0);
}

SparsePoly e_power_product(int n, const std::vector<int>& eps, Vars v) {
  SparsePoly out = SparsePoly::constant(n, 1);
  for (std::size_t i = 0; i < eps.size(); ++i) {
    if (eps[i] == 0) continue;
    SparsePoly e = elementary(n, static_cast<int>(i) + 1, v);
    for (int k = 0; k < eps[i]; ++k) out = out * e;
  }
  return out;
}

std::string ints(const std::vector<int>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(v[i]);
  }
  return out + ")";
}

std::vector<BasisElement> sorted_by_string(std::vector<BasisElement> v) {
  std::vector<std::pair<std::string, std::size_t>> keys;
  for (std::size_t i = 0; i < v.size(); ++i) keys.emplace_back(to_string(v[i]), i);
  std::sort(keys.begin(), keys.end());
  std::vector<BasisElement> out;
  out.reserve(v.size());
  for (const auto& k : keys) out.push_back(std::move(v[k.second]));
  return out;
}

bool proportional(const SparsePoly& lhs, const SparsePoly& rhs, Rational& c) {
  if (rhs.is_zero()) {
    c = 0;
    return lhs.is_zero();
  }
  const auto& [m, rc] = *rhs.terms().begin();
  c = lhs.coefficient(m) / rc;
  return lhs == rhs * c;
}

}  // namespace

IdealLevel parse_level(std::string_view text) {
  if (text == "G") return IdealLevel::G;
  if (text == "H") return IdealLevel::H;
  if (text == "J") return IdealLevel::J;
  if (text == "K") return IdealLevel::K;
  throw ParseError(0, "level must be one of G, H, J, K");
}

std::string to_string(IdealLevel level) {
  switch (level) {
    case IdealLevel::G: return "G";
    case IdealLevel::H: return "H";
    case IdealLevel::J: return "J";
    case IdealLevel::K: return "K";
  }
  return "?";
}

std::vector<NamedPoly> ideal_generators(const HollowGamma& g, IdealLevel level) {
  g.validate();
  const int n = g.n();
  if (n > kMaxVars) throw ResourceError("n exceeds the supported variable count");
  std::vector<NamedPoly> out;
  for (int i = 1; i <= n; ++i) {
    out.push_back({"G: x" + std::to_string(i) + "*y" + std::to_string(i), SparsePoly::x(n, i) * SparsePoly::y(n, i)});
  }
  add_squarefree(out, n, g.m1 + g.p1 + 1, Vars::X);
  add_squarefree(out, n, g.m2 + g.p2 + 1, Vars::Y);
  if (level == IdealLevel::G) return out;
  for (int j = g.p1 + 2; j <= g.p1 + g.m1; ++j) out.push_back({"H: " + poly_name("e", j, Vars::X), elementary(n, j, Vars::X)});
  for (int j = g.p2 + 2; j <= g.p2 + g.m2; ++j) out.push_back({"H: " + poly_name("e", j, Vars::Y), elementary(n, j, Vars::Y)});
  if (level == IdealLevel::H) return out;
  for (int j = g.k1; j <= g.k1 + g.p1; ++j) out.push_back({"J: " + poly_name("h", j, Vars::X), complete(n, j, Vars::X)});
  for (int j = g.k2; j <= g.k2 + g.p2; ++j) out.push_back({"J: " + poly_name("h", j, Vars::Y), complete(n, j, Vars::Y)});
  if (level == IdealLevel::J) return out;
  const auto [R, S] = diagram_bidegree(hollow_cells(g));
  for (int j = g.k1 + g.p1 + 1; j <= R + S; ++j) out.push_back({"K: " + poly_name("h", j, Vars::X), complete(n, j, Vars::X)});
  for (int j = g.k2 + g.p2 + 1; j <= R + S; ++j) out.push_back({"K: " + poly_name("h", j, Vars::Y), complete(n, j, Vars::Y)});
  return out;
}

std::pair<int, int> stats(const BasisElement& b) {
  int x = 0, y = 0;
  for (const auto& row : b.v.rows()) {
    for (const auto& c : row) {
      x += c.a;
      y += c.b;
    }
  }
  return {x, y};
}

SparsePoly basis_poly(const BasisElement& b) {
  const int n = b.t.size();
  SparsePoly base = build_bitableau(BitabKind::per, b.t, b.v);
  switch (b.kind) {
    case BasisKind::B: return base;
    case BasisKind::BB: return complete_product(n, b.qx, Vars::X) * complete_product(n, b.qy, Vars::Y) * base;
    case BasisKind::EEB: return e_power_product(n, b.qx, Vars::X) * e_power_product(n, b.qy, Vars::Y) * base;
  }
  return base;
}

std::string to_string(const BasisElement& b) {
  std::string head;
  switch (b.kind) {
    case BasisKind::B: head = "B"; break;
    case BasisKind::BB: head = "BB h" + ints(b.qx) + "(X) h" + ints(b.qy) + "(Y)"; break;
    case BasisKind::EEB: head = "EEB e^" + ints(b.qx) + "(X) e^" + ints(b.qy) + "(Y)"; break;
  }
  return head + " [" + to_string(b.t) + " | " + to_string(b.v) + "]_per";
}

std::vector<std::vector<int>> qset(int k, int p) {
  std::vector<std::vector<int>> out;
  if (k < 0) return out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int max_v) {
    if (static_cast<int>(cur.size()) == p) {
      out.push_back(cur);
      return;
    }
    for (int v = max_v; v >= 0; --v) {
      cur.push_back(v);
      rec(v);
      cur.pop_back();
    }
  };
  rec(k);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<BasisElement> basis_B(const HollowGamma& g, const Caps& caps) {
  check_n_cap(g, caps);
  const int n = g.n();
  std::vector<BasisElement> out;
  for (const auto& lam : partitions_of(n)) {
    const auto syt = enumerate_syt(n, lam, caps.n);
    for (const auto& u : syt) {
      const AFilling v = cocharge_diagram(g, u);
      for (const auto& t : syt) {
        BasisElement b;
        b.kind = BasisKind::B;
        b.t = t;
        b.u = u;
        b.v = v;
        std::tie(b.xdeg, b.ydeg) = stats(b);
        out.push_back(std::move(b));
      }
    }
  }
  return sorted_by_string(std::move(out));
}

std::vector<BasisElement> basis_BB(const HollowGamma& g, const Caps& caps) {
  check_n_cap(g, caps);
  const auto qx = qset(g.k1 - 1, g.p1 + 1);
  const auto qy = qset(g.k2 - 1, g.p2 + 1);
  const Integer size = factorial(g.n()) * static_cast<unsigned long>(qx.size()) * static_cast<unsigned long>(qy.size());
  if (size > static_cast<unsigned long>(caps.basis)) {
    throw ResourceError("|BB| = " + size.get_str() + " exceeds cap " + std::to_string(caps.basis));
  }
  std::vector<BasisElement> out;
  for (const auto& b : basis_B(g, caps)) {
    for (const auto& a : qx) {
      for (const auto& c : qy) {
        BasisElement e = b;
        e.kind = BasisKind::BB;
        e.qx = a;
        e.qy = c;
        for (int v : a) e.xdeg += v;
        for (int v : c) e.ydeg += v;
        out.push_back(std::move(e));
      }
    }
  }
  return sorted_by_string(std::move(out));
}

std::vector<BasisElement> basis_EEB(const HollowGamma& g, int R, int S, const Caps& caps) {
  std::vector<BasisElement> out;
  for (const auto& b : basis_B(g, caps)) {
    if (b.xdeg > R || b.ydeg > S) continue;
    for_each_weighted(g.m1 + g.p1, R - b.xdeg, [&](const std::vector<int>& ex, int wx) {
      for_each_weighted(g.m2 + g.p2, S - b.ydeg, [&](const std::vector<int>& ey, int wy) {
        BasisElement e = b;
        e.kind = BasisKind::EEB;
        e.qx = ex;
        e.qy = ey;
        e.xdeg += wx;
        e.ydeg += wy;
        out.push_back(std::move(e));
      });
    });
    if (out.size() > caps.basis) throw ResourceError("EEB exceeds cap " + std::to_string(caps.basis));
  }
  return sorted_by_string(std::move(out));
}

SeriesTable b_sum(const HollowGamma& g) {
  g.validate();
  const int n = g.n();
  SeriesTable out;
  for (const auto& lam : partitions_of(n)) {
    const auto syt = enumerate_syt(n, lam, kMaxVars);
    for (const auto& u : syt) {
      BasisElement b;
      b.v = cocharge_diagram(g, u);
      const auto [x, y] = stats(b);
      out.add(x, y, static_cast<long>(syt.size()));
    }
  }
  return out;
}

SeriesTable hilbert_closed(const HollowGamma& g) {
  return gaussian_binomial(g.p1 + g.k1, g.p1 + 1, Vars::X) * gaussian_binomial(g.p2 + g.k2, g.p2 + 1, Vars::Y) *
         b_sum(g);
}

SeriesTable hilbert_G(const HollowGamma& g, int R, int S) {
  return (inverse_rising(g.m1 + g.p1, R, Vars::X) * inverse_rising(g.m2 + g.p2, S, Vars::Y)).times_truncated(b_sum(g), R, S);
}

SeriesTable hilbert_H(const HollowGamma& g, int R, int S) {
  return (inverse_rising(g.p1 + 1, R, Vars::X) * inverse_rising(g.p2 + 1, S, Vars::Y)).times_truncated(b_sum(g), R, S);
}

Integer expected_total(const HollowGamma& g) {
  return factorial(g.n()) * binomial(g.p1 + g.k1, g.p1 + 1) * binomial(g.p2 + g.k2, g.p2 + 1);
}

SeriesTable HarmonicSpace::series() const {
  SeriesTable out;
  for (const auto& [k, b] : bases) out.add(k.first, k.second, static_cast<long>(b.size()));
  return out;
}

HarmonicSpace harmonic_space(const HollowGamma& g, const Caps& caps) {
  check_n_cap(g, caps);
  HarmonicSpace h;
  h.n = g.n();
  const auto cells = hollow_cells(g);
  h.top = diagram_bidegree(cells);
  h.delta = delta(cells, caps.n);
  if (h.delta.is_zero()) return h;
  const auto [R, S] = h.top;
  h.bases[{R, S}] = {h.delta};
  for (int d = R + S - 1; d >= 0; --d) {
    for (int r = std::min(R, d); r >= std::max(0, d - S); --r) {
      const int s = d - r;
      Echelon e(h.n);
      if (auto it = h.bases.find({r + 1, s}); it != h.bases.end()) {
        for (const auto& f : it->second) {
          for (int i = 0; i < h.n; ++i) {
            SparsePoly df = diff_x(f, i);
            if (!df.is_zero()) e.insert(df);
          }
        }
      }
      if (auto it = h.bases.find({r, s + 1}); it != h.bases.end()) {
        for (const auto& f : it->second) {
          for (int i = 0; i < h.n; ++i) {
            SparsePoly df = diff_y(f, i);
            if (!df.is_zero()) e.insert(df);
          }
        }
      }
      if (e.rank() > 0) h.bases[{r, s}] = e.basis();
    }
  }
  return h;
}

SeriesTable harmonic_series(const HollowGamma& g, const Caps& caps) { return harmonic_space(g, caps).series(); }

QuotientModel::QuotientModel(int n, const std::vector<NamedPoly>& generators) : n_(n) {
  for (const auto& gen : generators) {
    if (gen.poly.nvars() != n) throw DimensionError("quotient: generator over a different ring");
    if (gen.poly.is_zero()) continue;
    if (!gen.poly.is_bihomogeneous()) throw PreconditionError("quotient: generator " + gen.name + " is not bihomogeneous");
    if (gen.poly.size() == 1) {
      monomial_gens_.push_back(gen.poly.terms().begin()->first);
    } else {
      other_gens_.push_back(gen.poly);
    }
  }
}

SparsePoly QuotientModel::reduce(const SparsePoly& f) const {
  SparsePoly out(n_);
  for (const auto& [m, c] : f.terms()) {
    bool in_ideal = false;
    for (const auto& g : monomial_gens_) {
      if (m.divisible_by(g)) {
        in_ideal = true;
        break;
      }
    }
    if (!in_ideal) out.add_term(m, c);
  }
  return out;
}

std::vector<Monomial> QuotientModel::standard_monomials(int r, int s) const {
  std::vector<Monomial> out;
  if (r < 0 || s < 0) return out;
  for_each_composition(r, n_, [&](const std::vector<int>& xs) {
    for_each_composition(s, n_, [&](const std::vector<int>& ys) {
      Monomial m;
      for (int i = 0; i < n_; ++i) {
        m.x(i) = static_cast<std::uint8_t>(xs[i]);
        m.y(i) = static_cast<std::uint8_t>(ys[i]);
      }
      for (const auto& g : monomial_gens_) {
        if (m.divisible_by(g)) return;
      }
      out.push_back(m);
    });
  });
  return out;
}

const Echelon& QuotientModel::ideal_span(int r, int s) {
  if (auto it = spans_.find({r, s}); it != spans_.end()) return it->second;
  Echelon e(n_);
  for (const auto& g : other_gens_) {
    const auto [gr, gs] = g.bidegrees().front();
    if (gr > r || gs > s) continue;
    for (const auto& m : standard_monomials(r - gr, s - gs)) {
      SparsePoly f = reduce(SparsePoly::term(n_, m) * g);
      if (!f.is_zero()) e.insert(f);
    }
  }
  return spans_.emplace(std::make_pair(r, s), std::move(e)).first->second;
}

long long QuotientModel::dimension(int r, int s) {
  return static_cast<long long>(standard_monomials(r, s).size()) - static_cast<long long>(ideal_span(r, s).rank());
}

long long QuotientModel::independent_count(int r, int s, const std::vector<SparsePoly>& elements) {
  Echelon e = ideal_span(r, s);
  long long count = 0;
  for (const auto& f : elements) {
    SparsePoly red = reduce(f);
    if (!red.is_zero() && e.insert(red).independent) ++count;
  }
  return count;
}

bool QuotientModel::spans(int r, int s, const std::vector<SparsePoly>& elements) {
  Echelon e = ideal_span(r, s);
  for (const auto& f : elements) {
    SparsePoly red = reduce(f);
    if (!red.is_zero()) e.insert(red);
  }
  return static_cast<long long>(e.rank()) == static_cast<long long>(standard_monomials(r, s).size());
}

SeriesTable quotient_series(const HollowGamma& g, IdealLevel level, int R, int S) {
  QuotientModel model(g.n(), ideal_generators(g, level));
  SeriesTable out;
  for (int r = 0; r <= R; ++r) {
    for (int s = 0; s <= S; ++s) out.add(r, s, static_cast<long>(model.dimension(r, s)));
  }
  return out;
}

std::string Report::to_json() const {
  nlohmann::json j;
  j["gamma"] = gamma;
  j["level"] = level;
  nlohmann::json s = nlohmann::json::array();
  for (const auto& [k, c] : series.entries()) {
    if (!c.fits_slong_p()) throw ResourceError("series coefficient does not fit a JSON integer");
    s.push_back({k.first, k.second, c.get_si()});
  }
  j["series"] = s;
  j["rank"] = rank;
  j["expected"] = expected;
  j["pass"] = pass;
  j["details"] = details;
  return j.dump();
}

Report verify_independence(const HollowGamma& g, const Caps& caps) {
  const auto bb = basis_BB(g, caps);
  const HarmonicSpace h = harmonic_space(g, caps);
  Report rep;
  rep.gamma = g.to_string();
  rep.level = "BB";
  rep.expected = static_cast<long long>(bb.size());
  const int n = g.n();
  std::map<std::pair<int, int>, Echelon> images;
  std::map<std::pair<int, int>, std::vector<std::size_t>> members;
  for (std::size_t idx = 0; idx < bb.size(); ++idx) {
    const auto& b = bb[idx];
    rep.series.add(b.xdeg, b.ydeg, 1);
    SparsePoly f = apply_diff(build_bitableau(BitabKind::per, b.t, b.v), h.delta);
    for (int q : b.qx) f = apply_diff(complete(n, q, Vars::X), f);
    for (int q : b.qy) f = apply_diff(complete(n, q, Vars::Y), f);
    const std::pair<int, int> key{b.xdeg, b.ydeg};
    auto& ech = images.try_emplace(key, n, true).first->second;
    if (f.is_zero()) {
      rep.details.push_back("zero image: " + to_string(b));
      continue;
    }
    auto& mem = members[key];
    mem.push_back(idx);
    auto res = ech.insert(f);
    if (res.independent) {
      ++rep.rank;
    } else if (rep.details.size() < 20) {
      std::string line = "dependent: " + to_string(b) + " =";
      for (const auto& [k, c] : res.dependency) line += " " + c.get_str() + "*{" + to_string(bb[mem[k]]) + "}";
      rep.details.push_back(line);
    }
  }
  const SeriesTable harm = h.series();
  bool counts_match = (rep.series == harm);
  if (!counts_match) rep.details.push_back("BB bidegree counts differ from the harmonic series " + harm.to_string());
  const bool formula_ok = expected_total(g) == static_cast<long>(bb.size());
  if (!formula_ok) rep.details.push_back("|BB| differs from the product formula " + expected_total(g).get_str());
  rep.pass = rep.rank == rep.expected && counts_match && formula_ok;
  return rep;
}

Report annihilation_check(const HollowGamma& g, const Caps& caps) {
  check_n_cap(g, caps);
  Report rep;
  rep.gamma = g.to_string();
  rep.level = "K";
  const int n = g.n();
  const SparsePoly d = delta(hollow_cells(g), caps.n);
  auto record = [&](bool ok, const std::string& what) {
    ++rep.expected;
    if (ok) ++rep.rank;
    rep.details.push_back(std::string(ok ? "PASS " : "FAIL ") + what);
  };
  for (const auto& gen : ideal_generators(g, IdealLevel::K)) {
    record(apply_diff(gen.poly, d).is_zero(), gen.name + " annihilates Delta");
  }
  for (int j = 0; j < g.k1; ++j) {
    Rational c;
    const SparsePoly rhs = delta(bracket_diagram(g, {}, {j}), caps.n);
    const bool ok = proportional(apply_diff(complete(n, j, Vars::X), d), rhs, c) && c > 0;
    record(ok, poly_name("h", j, Vars::X) + " lowers Delta with c = " + c.get_str());
  }
  for (int l = 0; l < g.k2; ++l) {
    Rational c;
    const SparsePoly rhs = delta(bracket_diagram(g, {l}, {}), caps.n);
    const bool ok = proportional(apply_diff(complete(n, l, Vars::Y), d), rhs, c) && c > 0;
    record(ok, poly_name("h", l, Vars::Y) + " lowers Delta with c = " + c.get_str());
  }
  rep.pass = rep.rank == rep.expected;
  return rep;
}

Report eeb_check(const HollowGamma& g, int R, int S, const Caps& caps) {
  const auto eeb = basis_EEB(g, R, S, caps);
  QuotientModel model(g.n(), ideal_generators(g, IdealLevel::G));
  const SeriesTable closed = hilbert_G(g, R, S);
  Report rep;
  rep.gamma = g.to_string();
  rep.level = "G";
  rep.pass = true;
  std::map<std::pair<int, int>, std::vector<SparsePoly>> by_degree;
  for (const auto& b : eeb) by_degree[{b.xdeg, b.ydeg}].push_back(basis_poly(b));
  for (int r = 0; r <= R; ++r) {
    for (int s = 0; s <= S; ++s) {
      const auto& elems = by_degree[{r, s}];
      const long long count = static_cast<long long>(elems.size());
      const long long dim = model.dimension(r, s);
      const long long indep = model.independent_count(r, s, elems);
      rep.series.add(r, s, static_cast<long>(count));
      rep.rank += indep;
      rep.expected += dim;
      const bool ok = indep == count && count == dim && closed.at(r, s) == static_cast<long>(dim);
      if (!ok) {
        rep.pass = false;
        rep.details.push_back("bidegree (" + std::to_string(r) + "," + std::to_string(s) + "): " +
                              std::to_string(count) + " elements, " + std::to_string(indep) + " independent, dim " +
                              std::to_string(dim) + ", closed form " + closed.at(r, s).get_str());
      }
    }
  }
  return rep;
}

Report algebraic_independence_check(const HollowGamma& g, IdealLevel level, int R, int S, const Caps& caps) {
  if (level != IdealLevel::G && level != IdealLevel::H) {
    throw PreconditionError("algebraic independence is checked at levels G and H only");
  }
  const int n = g.n();
  std::map<std::pair<int, int>, std::vector<SparsePoly>> by_degree;
  if (level == IdealLevel::G) {
    for (const auto& b : basis_EEB(g, R, S, caps)) by_degree[{b.xdeg, b.ydeg}].push_back(basis_poly(b));
  } else {
    if (g.k1 < 1 || g.k2 < 1) throw PreconditionError("h-product check needs k1, k2 >= 1");
    std::size_t total = 0;
    for (const auto& b : basis_B(g, caps)) {
      if (b.xdeg > R || b.ydeg > S) continue;
      const SparsePoly base = basis_poly(b);
      for_each_parts_in_range(g.k1, g.k1 + g.p1, R - b.xdeg, [&](const std::vector<int>& lx, int wx) {
        for_each_parts_in_range(g.k2, g.k2 + g.p2, S - b.ydeg, [&](const std::vector<int>& ly, int wy) {
          if (++total > caps.basis) throw ResourceError("h-product family exceeds cap " + std::to_string(caps.basis));
          by_degree[{b.xdeg + wx, b.ydeg + wy}].push_back(complete_product(n, lx, Vars::X) *
                                                          complete_product(n, ly, Vars::Y) * base);
        });
      });
    }
  }
  QuotientModel model(n, ideal_generators(g, level));
  Report rep;
  rep.gamma = g.to_string();
  rep.level = to_string(level);
  for (const auto& [key, elems] : by_degree) {
    const long long indep = model.independent_count(key.first, key.second, elems);
    rep.series.add(key.first, key.second, static_cast<long>(elems.size()));
    rep.rank += indep;
    rep.expected += static_cast<long long>(elems.size());
    if (indep != static_cast<long long>(elems.size())) {
      rep.details.push_back("bidegree (" + std::to_string(key.first) + "," + std::to_string(key.second) +
                            "): rank " + std::to_string(indep) + " of " + std::to_string(elems.size()));
    }
  }
  rep.pass = rep.rank == rep.expected;
  return rep;
}

}  // namespace hollowgh
