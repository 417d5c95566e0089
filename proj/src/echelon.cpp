#include "hollowgh/echelon.hpp"

#include "hollowgh/errors.hpp"

namespace hollowgh {

namespace {

using IntVec = std::vector<std::pair<Monomial, Integer>>;

// a*u - b*v on descending-sorted sparse vectors.
IntVec combine(const Integer& a, const IntVec& u, const Integer& b, const IntVec& v) {
  IntVec out;
  out.reserve(u.size() + v.size());
  std::size_t i = 0, j = 0;
  while (i < u.size() || j < v.size()) {
    if (j == v.size() || (i < u.size() && v[j].first < u[i].first)) {
      out.emplace_back(u[i].first, a * u[i].second);
      ++i;
    } else if (i == u.size() || u[i].first < v[j].first) {
      out.emplace_back(v[j].first, -b * v[j].second);
      ++j;
    } else {
      Integer c = a * u[i].second - b * v[j].second;
      if (sgn(c) != 0) out.emplace_back(u[i].first, std::move(c));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Echelon::Echelon(int nvars, bool track_combinations) : nvars_(nvars), track_(track_combinations) {}

Echelon::IntVec Echelon::to_int(const SparsePoly& v, Integer& denominator) {
  denominator = 1;
  for (const auto& [m, c] : v.terms()) {
    mpz_lcm(denominator.get_mpz_t(), denominator.get_mpz_t(), c.get_den_mpz_t());
  }
  IntVec out;
  out.reserve(v.size());
  for (auto it = v.terms().rbegin(); it != v.terms().rend(); ++it) {
    Integer num = it->second.get_num() * (denominator / it->second.get_den());
    out.emplace_back(it->first, std::move(num));
  }
  return out;
}

void Echelon::normalize(Work& w, bool track) {
  Integer g = 0;
  for (const auto& [m, c] : w.vec) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  if (track) {
    for (const auto& [k, c] : w.combo) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), w.scale.get_mpz_t());
  }
  if (g == 0 || g == 1) return;
  for (auto& [m, c] : w.vec) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  if (track) {
    for (auto& [k, c] : w.combo) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(w.scale.get_mpz_t(), w.scale.get_mpz_t(), g.get_mpz_t());
  }
}

void Echelon::reduce(Work& w) const {
  while (!w.vec.empty()) {
    auto it = pivots_.find(w.vec.front().first);
    if (it == pivots_.end()) return;
    const Row& row = rows_[it->second];
    Integer a = row.vec.front().second;
    Integer b = w.vec.front().second;
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    a /= g;
    b /= g;
    w.vec = combine(a, w.vec, b, row.vec);
    if (track_) {
      Combo next;
      for (const auto& [k, c] : w.combo) next[k] += a * c;
      for (const auto& [k, c] : row.combo) next[k] -= b * c;
      std::erase_if(next, [](const auto& kv) { return sgn(kv.second) == 0; });
      w.combo = std::move(next);
      w.scale *= a;
    }
    normalize(w, track_);
  }
}

Echelon::InsertResult Echelon::insert(const SparsePoly& v) {
  if (v.nvars() != nvars_) throw DimensionError("echelon: vector over a different ring");
  const std::size_t index = input_scale_.size();
  Integer den;
  // The input itself is tracked inside combo, so scale is unused (0 keeps it out of gcds).
  Work w{to_int(v, den), {}, 0};
  input_scale_.push_back(den);
  if (track_) w.combo[index] = 1;
  reduce(w);
  InsertResult result;
  if (w.vec.empty()) {
    if (track_) {
      // 0 = sum combo_j * D_j * input_j, the new input included.
      Integer own = w.combo.count(index) ? w.combo[index] : Integer(0);
      for (const auto& [k, c] : w.combo) {
        if (k == index) continue;
        Rational coef(-c * input_scale_[k], own * den);
        coef.canonicalize();
        result.dependency[k] = coef;
      }
    }
    return result;
  }
  if (sgn(w.vec.front().second) < 0) {
    for (auto& [m, c] : w.vec) c = -c;
    for (auto& [k, c] : w.combo) c = -c;
  }
  pivots_.emplace(w.vec.front().first, rows_.size());
  rows_.push_back(Row{std::move(w.vec), std::move(w.combo)});
  result.independent = true;
  return result;
}

bool Echelon::in_span(const SparsePoly& v) const {
  if (v.nvars() != nvars_) throw DimensionError("echelon: vector over a different ring");
  Integer den;
  Work w{to_int(v, den), {}, 1};
  while (!w.vec.empty()) {
    auto it = pivots_.find(w.vec.front().first);
    if (it == pivots_.end()) return false;
    const Row& row = rows_[it->second];
    Integer a = row.vec.front().second;
    Integer b = w.vec.front().second;
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    w.vec = combine(a / g, w.vec, b / g, row.vec);
    normalize(w, false);
  }
  return true;
}

std::optional<std::vector<Rational>> Echelon::coordinates(const SparsePoly& v) const {
  if (v.nvars() != nvars_) throw DimensionError("echelon: vector over a different ring");
  std::vector<Rational> coords(rows_.size(), Rational(0));
  SparsePoly w = v;
  while (!w.is_zero()) {
    const auto& [lead, lc] = *w.terms().rbegin();
    auto it = pivots_.find(lead);
    if (it == pivots_.end()) return std::nullopt;
    const Row& row = rows_[it->second];
    Rational c = lc / Rational(row.vec.front().second);
    coords[it->second] += c;
    SparsePoly r(nvars_);
    for (const auto& [m, e] : row.vec) r.add_term(m, Rational(e) * c);
    w -= r;
  }
  return coords;
}

std::optional<std::map<std::size_t, Rational>> Echelon::express(const SparsePoly& v) const {
  if (!track_) throw PreconditionError("echelon: express() needs combination tracking");
  Integer den;
  Work w{to_int(v, den), {}, 1};
  reduce(w);
  if (!w.vec.empty()) return std::nullopt;
  // 0 = scale * den * v + sum combo_j * D_j * input_j
  std::map<std::size_t, Rational> out;
  for (const auto& [k, c] : w.combo) {
    Rational coef(-c * input_scale_[k], w.scale * den);
    coef.canonicalize();
    if (sgn(coef) != 0) out[k] = coef;
  }
  return out;
}

std::vector<SparsePoly> Echelon::basis() const {
  std::vector<SparsePoly> out;
  out.reserve(rows_.size());
  for (const auto& row : rows_) {
    SparsePoly p(nvars_);
    for (const auto& [m, c] : row.vec) p.add_term(m, Rational(c));
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace hollowgh
