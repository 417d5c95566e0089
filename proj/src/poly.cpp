#include "hollowgh/poly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <sstream>

#include "hollowgh/errors.hpp"

namespace hollowgh {

namespace {

void check_same_ring(const SparsePoly& a, const SparsePoly& b) {
  if (a.nvars() != b.nvars()) {
    throw DimensionError("polynomials over different rings: n=" + std::to_string(a.nvars()) +
                         " vs n=" + std::to_string(b.nvars()));
  }
}

void check_nvars(int nvars) {
  if (nvars < 0 || nvars > kMaxVars) {
    throw DimensionError("number of variables must lie in [0, " + std::to_string(kMaxVars) +
                         "], got " + std::to_string(nvars));
  }
}

std::uint8_t checked_exponent(int e) {
  if (e > 255) throw ResourceError("exponent exceeds 255");
  return static_cast<std::uint8_t>(e);
}

}  // namespace

int Monomial::xdeg() const {
  int d = 0;
  for (int i = 0; i < kMaxVars; ++i) d += exps[i];
  return d;
}

int Monomial::ydeg() const {
  int d = 0;
  for (int i = kMaxVars; i < 2 * kMaxVars; ++i) d += exps[i];
  return d;
}

bool Monomial::divisible_by(const Monomial& other) const {
  for (std::size_t i = 0; i < exps.size(); ++i) {
    if (other.exps[i] > exps[i]) return false;
  }
  return true;
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  // FNV-1a over the 16 exponent bytes.
  std::uint64_t h = 1469598103934665603ULL;
  for (auto e : m.exps) {
    h ^= e;
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}

SparsePoly::SparsePoly(int nvars) : nvars_(nvars) { check_nvars(nvars); }

SparsePoly SparsePoly::constant(int nvars, const Rational& c) {
  SparsePoly p(nvars);
  p.add_term(Monomial{}, c);
  return p;
}

SparsePoly SparsePoly::term(int nvars, const Monomial& m, const Rational& c) {
  SparsePoly p(nvars);
  for (int i = nvars; i < kMaxVars; ++i) {
    if (m.x(i) != 0 || m.y(i) != 0) throw DimensionError("monomial uses a variable beyond n");
  }
  p.add_term(m, c);
  return p;
}

SparsePoly SparsePoly::x(int nvars, int i) {
  if (i < 1 || i > nvars) throw DimensionError("x" + std::to_string(i) + " outside ring");
  Monomial m;
  m.x(i - 1) = 1;
  return term(nvars, m);
}

SparsePoly SparsePoly::y(int nvars, int i) {
  if (i < 1 || i > nvars) throw DimensionError("y" + std::to_string(i) + " outside ring");
  Monomial m;
  m.y(i - 1) = 1;
  return term(nvars, m);
}

Rational SparsePoly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void SparsePoly::add_term(const Monomial& m, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

SparsePoly& SparsePoly::operator+=(const SparsePoly& o) {
  check_same_ring(*this, o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

SparsePoly& SparsePoly::operator-=(const SparsePoly& o) {
  check_same_ring(*this, o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

SparsePoly& SparsePoly::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
  check_same_ring(a, b);
  TermAccumulator acc(a.nvars());
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      Monomial m;
      for (std::size_t i = 0; i < m.exps.size(); ++i) {
        m.exps[i] = checked_exponent(int(ma.exps[i]) + int(mb.exps[i]));
      }
      acc.add(m, ca * cb);
    }
  }
  return acc.finish();
}

SparsePoly SparsePoly::operator-() const {
  SparsePoly r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

bool SparsePoly::operator==(const SparsePoly& o) const {
  return nvars_ == o.nvars_ && terms_ == o.terms_;
}

std::vector<std::pair<int, int>> SparsePoly::bidegrees() const {
  std::set<std::pair<int, int>> seen;
  for (const auto& [m, c] : terms_) seen.emplace(m.xdeg(), m.ydeg());
  return {seen.begin(), seen.end()};
}

SparsePoly SparsePoly::permuted(std::span<const int> sigma) const {
  if (static_cast<int>(sigma.size()) != nvars_) throw DimensionError("permutation length != n");
  SparsePoly r(nvars_);
  for (const auto& [m, c] : terms_) {
    Monomial out;
    for (int i = 0; i < nvars_; ++i) {
      out.x(sigma[i]) = m.x(i);
      out.y(sigma[i]) = m.y(i);
    }
    r.terms_.emplace(out, c);
  }
  return r;
}

std::string SparsePoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    Rational mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    std::vector<std::string> factors;
    for (int i = 0; i < nvars_; ++i) {
      if (m.x(i)) {
        factors.push_back("x" + std::to_string(i + 1) +
                          (m.x(i) > 1 ? "^" + std::to_string(m.x(i)) : ""));
      }
    }
    for (int i = 0; i < nvars_; ++i) {
      if (m.y(i)) {
        factors.push_back("y" + std::to_string(i + 1) +
                          (m.y(i) > 1 ? "^" + std::to_string(m.y(i)) : ""));
      }
    }
    if (factors.empty() || mag != 1) factors.insert(factors.begin(), mag.get_str());
    for (std::size_t k = 0; k < factors.size(); ++k) os << (k ? "*" : "") << factors[k];
  }
  return os.str();
}

void TermAccumulator::add(const Monomial& m, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = pending_.try_emplace(m, c);
  if (!inserted) it->second += c;
}

SparsePoly TermAccumulator::finish() {
  SparsePoly p(nvars_);
  for (auto& [m, c] : pending_) {
    if (sgn(c) != 0) p.terms_.emplace(m, std::move(c));
  }
  pending_.clear();
  return p;
}

SparsePoly arith(const SparsePoly& p, const SparsePoly& q, ArithKind kind, const Rational& c) {
  switch (kind) {
    case ArithKind::add:
      return p + q;
    case ArithKind::mul:
      return p * q;
    case ArithKind::scale:
      return p * c;
  }
  return p;
}

Integer falling_factorial(int a, int k) {
  if (k < 0 || a < 0) return 0;
  if (k > a) return 0;
  Integer r = 1;
  for (int i = 0; i < k; ++i) r *= a - i;
  return r;
}

SparsePoly apply_diff(const SparsePoly& op, const SparsePoly& f) {
  check_same_ring(op, f);
  TermAccumulator acc(f.nvars());
  const int n = f.nvars();
  for (const auto& [mo, co] : op.terms()) {
    for (const auto& [mf, cf] : f.terms()) {
      if (!mf.divisible_by(mo)) continue;
      Integer factor = 1;
      Monomial out;
      for (int i = 0; i < n; ++i) {
        factor *= falling_factorial(mf.x(i), mo.x(i));
        factor *= falling_factorial(mf.y(i), mo.y(i));
        out.x(i) = mf.x(i) - mo.x(i);
        out.y(i) = mf.y(i) - mo.y(i);
      }
      acc.add(out, co * cf * Rational(factor));
    }
  }
  return acc.finish();
}

SparsePoly diff_x(const SparsePoly& f, int i) {
  if (i < 0 || i >= f.nvars()) throw DimensionError("variable index outside ring");
  Monomial m;
  m.x(i) = 1;
  return apply_diff(SparsePoly::term(f.nvars(), m), f);
}

SparsePoly diff_y(const SparsePoly& f, int i) {
  if (i < 0 || i >= f.nvars()) throw DimensionError("variable index outside ring");
  Monomial m;
  m.y(i) = 1;
  return apply_diff(SparsePoly::term(f.nvars(), m), f);
}

SparsePoly bigraded_component(const SparsePoly& p, int r, int s) {
  SparsePoly out(p.nvars());
  for (const auto& [m, c] : p.terms()) {
    if (m.xdeg() == r && m.ydeg() == s) out.add_term(m, c);
  }
  return out;
}

std::map<std::pair<int, int>, SparsePoly> bigraded_decomposition(const SparsePoly& p) {
  std::map<std::pair<int, int>, SparsePoly> out;
  for (const auto& [m, c] : p.terms()) {
    auto [it, inserted] = out.try_emplace({m.xdeg(), m.ydeg()}, p.nvars());
    it->second.add_term(m, c);
  }
  return out;
}

namespace {

class PolyParser {
 public:
  PolyParser(int nvars, std::string_view text) : n_(nvars), s_(text) {}

  SparsePoly parse() {
    SparsePoly out(n_);
    skip();
    if (pos_ == s_.size()) throw ParseError(pos_, "empty polynomial");
    bool first = true;
    while (pos_ < s_.size()) {
      int sign = 1;
      if (s_[pos_] == '+' || s_[pos_] == '-') {
        sign = s_[pos_] == '-' ? -1 : 1;
        ++pos_;
        skip();
      } else if (!first) {
        throw ParseError(pos_, "expected '+' or '-'");
      }
      first = false;
      auto [m, c] = parse_term();
      out.add_term(m, c * sign);
      skip();
    }
    return out;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  long parse_int() {
    std::size_t start = pos_;
    long v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      v = v * 10 + (s_[pos_] - '0');
      if (v > 1000000000L) throw ParseError(start, "integer too large");
      ++pos_;
    }
    if (pos_ == start) throw ParseError(pos_, "expected an integer");
    return v;
  }

  std::pair<Monomial, Rational> parse_term() {
    Monomial m;
    Rational c = 1;
    bool any = false;
    while (pos_ < s_.size()) {
      skip();
      if (pos_ == s_.size()) break;
      char ch = s_[pos_];
      if (std::isdigit(static_cast<unsigned char>(ch))) {
        std::size_t start = pos_;
        std::string digits;
        while (pos_ < s_.size() &&
               (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '/')) {
          digits.push_back(s_[pos_++]);
        }
        try {
          Rational v(digits);
          v.canonicalize();
          c *= v;
        } catch (const std::invalid_argument&) {
          throw ParseError(start, "bad coefficient '" + digits + "'");
        }
      } else if (ch == 'x' || ch == 'y') {
        std::size_t start = pos_;
        ++pos_;
        long idx = parse_int();
        if (idx < 1 || idx > n_) {
          throw ParseError(start, "variable index " + std::to_string(idx) + " outside 1.." +
                                      std::to_string(n_));
        }
        long e = 1;
        skip();
        if (pos_ < s_.size() && s_[pos_] == '^') {
          ++pos_;
          skip();
          e = parse_int();
        }
        auto& slot = ch == 'x' ? m.x(int(idx) - 1) : m.y(int(idx) - 1);
        slot = checked_exponent(int(slot) + int(e));
      } else {
        throw ParseError(pos_, std::string("unexpected character '") + ch + "'");
      }
      any = true;
      skip();
      if (pos_ < s_.size() && s_[pos_] == '*') {
        ++pos_;
        continue;
      }
      if (pos_ < s_.size() && (s_[pos_] == '+' || s_[pos_] == '-')) break;
    }
    if (!any) throw ParseError(pos_, "expected a term");
    return {m, c};
  }

  int n_;
  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

SparsePoly parse_poly(int nvars, std::string_view text) { return PolyParser(nvars, text).parse(); }

int permutation_sign(std::span<const int> perm) {
  std::vector<bool> seen(perm.size(), false);
  int sign = 1;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(perm[j])) {
      seen[j] = true;
      ++len;
    }
    if (len % 2 == 0) sign = -sign;
  }
  return sign;
}

}  // namespace hollowgh
