#include "hollowgh/symfun.hpp"

#include <algorithm>
#include <functional>

#include "json.hpp"

#include "hollowgh/errors.hpp"

namespace hollowgh {

namespace {

void check_n(int n) {
  if (n < 0 || n > kMaxVars) throw DimensionError("symmetric polynomial: n outside 0.." + std::to_string(kMaxVars));
}

std::uint8_t& slot(Monomial& m, Vars v, int i) { return v == Vars::X ? m.x(i) : m.y(i); }

using UniPoly = std::vector<Integer>;

UniPoly uni_mul(const UniPoly& a, const UniPoly& b) {
  if (a.empty() || b.empty()) return {};
  UniPoly out(a.size() + b.size() - 1, Integer(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

UniPoly uni_rising(int j) {
  UniPoly out{Integer(1)};
  for (int i = 1; i <= j; ++i) {
    UniPoly f(i + 1, Integer(0));
    f[0] = 1;
    f[i] = -1;
    out = uni_mul(out, f);
  }
  return out;
}

// Exact quotient num / den; throws ConsistencyError on a nonzero remainder.
UniPoly uni_divide(UniPoly num, const UniPoly& den) {
  while (!num.empty() && num.back() == 0) num.pop_back();
  if (den.empty() || den.back() == 0) throw ConsistencyError("division by a zero or untrimmed polynomial");
  if (num.size() < den.size()) {
    if (num.empty()) return {};
    throw ConsistencyError("polynomial division leaves a remainder");
  }
  UniPoly q(num.size() - den.size() + 1, Integer(0));
  for (std::size_t k = q.size(); k-- > 0;) {
    Integer lead = num[k + den.size() - 1];
    if (lead % den.back() != 0) throw ConsistencyError("polynomial division is not integral");
    q[k] = lead / den.back();
    for (std::size_t i = 0; i < den.size(); ++i) num[k + i] -= q[k] * den[i];
  }
  for (const auto& c : num) {
    if (c != 0) throw ConsistencyError("polynomial division leaves a remainder");
  }
  return q;
}

SeriesTable from_uni(const UniPoly& p, Vars v) {
  SeriesTable out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] != 0) out.add(v == Vars::X ? int(i) : 0, v == Vars::Y ? int(i) : 0, p[i]);
  }
  return out;
}

}  // namespace

SparsePoly elementary(int n, int r, Vars v) {
  check_n(n);
  SparsePoly out(n);
  if (r < 0 || r > n) return out;
  std::vector<bool> pick(n, false);
  std::fill(pick.begin(), pick.begin() + r, true);
  do {
    Monomial m;
    for (int i = 0; i < n; ++i) {
      if (pick[i]) slot(m, v, i) = 1;
    }
    out.add_term(m, 1);
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return out;
}

SparsePoly complete(int n, int r, Vars v) {
  check_n(n);
  SparsePoly out(n);
  if (r < 0) return out;
  if (n == 0) return r == 0 ? SparsePoly::constant(0, 1) : out;
  if (r > 255) throw ResourceError("complete: degree exceeds 255");
  Monomial m;
  std::function<void(int, int)> rec = [&](int i, int rest) {
    if (i == n - 1) {
      slot(m, v, i) = static_cast<std::uint8_t>(rest);
      out.add_term(m, 1);
      return;
    }
    for (int e = rest; e >= 0; --e) {
      slot(m, v, i) = static_cast<std::uint8_t>(e);
      rec(i + 1, rest - e);
    }
  };
  rec(0, r);
  return out;
}

SparsePoly monomial_symmetric(int n, const Partition& lambda, Vars v) {
  check_n(n);
  if (lambda.length() > n) throw PreconditionError("monomial_symmetric: partition longer than n");
  std::vector<int> exps(lambda.parts());
  exps.resize(n, 0);
  std::sort(exps.begin(), exps.end());
  SparsePoly out(n);
  do {
    Monomial m;
    for (int i = 0; i < n; ++i) slot(m, v, i) = static_cast<std::uint8_t>(exps[i]);
    out.add_term(m, 1);
  } while (std::next_permutation(exps.begin(), exps.end()));
  return out;
}

SparsePoly macmahon(const std::vector<ACell>& beta) {
  const int n = static_cast<int>(beta.size());
  check_n(n);
  std::vector<ACell> d(beta);
  std::sort(d.begin(), d.end());
  SparsePoly out(n);
  do {
    Monomial m;
    for (int i = 0; i < n; ++i) {
      if (d[i].a < 0 || d[i].b < 0) throw PreconditionError("macmahon: entries must lie in N^2");
      m.x(i) = static_cast<std::uint8_t>(d[i].a);
      m.y(i) = static_cast<std::uint8_t>(d[i].b);
    }
    out.add_term(m, 1);
  } while (std::next_permutation(d.begin(), d.end()));
  return out;
}

SparsePoly complete_product(int n, const std::vector<int>& q, Vars v) {
  SparsePoly out = SparsePoly::constant(n, 1);
  for (int r : q) out = out * complete(n, r, v);
  return out;
}

Integer domino_count(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size()) return 0;
  if (lambda.length() == 0) return 1;
  const int maxlen = mu.length() ? mu[0] : 0;
  std::vector<int> counts(maxlen + 1, 0);
  for (int part : mu.parts()) ++counts[part];
  std::map<std::pair<int, std::vector<int>>, Integer> memo;

  // Tilings of rows row.. using the remaining counts.
  std::function<Integer(int, std::vector<int>&)> rows_from;
  std::function<Integer(int, int, std::vector<int>&)> fill_row = [&](int row, int rest, std::vector<int>& c) {
    if (rest == 0) return rows_from(row + 1, c);
    Integer total = 0;
    for (int len = 1; len <= std::min(rest, maxlen); ++len) {
      if (c[len] == 0) continue;
      --c[len];
      total += fill_row(row, rest - len, c);
      ++c[len];
    }
    return total;
  };
  rows_from = [&](int row, std::vector<int>& c) -> Integer {
    if (row == lambda.length()) return 1;
    auto key = std::make_pair(row, c);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    Integer v = fill_row(row, lambda[row], c);
    memo.emplace(std::move(key), v);
    return v;
  };
  return rows_from(0, counts);
}

Integer h_to_e_coefficient(const Partition& lambda, const Partition& mu) {
  Integer d = domino_count(lambda, mu);
  return ((mu.size() - mu.length()) % 2 == 0) ? d : Integer(-d);
}

std::vector<std::pair<Partition, Integer>> h_to_e_expand(const Partition& lambda, int cap) {
  if (lambda.size() > cap) {
    throw ResourceError("h_to_e_expand: |lambda| = " + std::to_string(lambda.size()) + " exceeds cap " +
                        std::to_string(cap));
  }
  std::vector<std::pair<Partition, Integer>> out;
  for (const auto& mu : partitions_of(lambda.size())) {
    Integer c = h_to_e_coefficient(lambda, mu);
    if (c != 0) out.emplace_back(mu, c);
  }
  return out;
}

Partition max_type(const Partition& lambda, int p1) {
  if (p1 < 0) throw PreconditionError("max_type: p1 must be nonnegative");
  const int w = p1 + 1;
  std::vector<int> alpha(w + 1, 0);
  for (int part : lambda.parts()) {
    alpha[w] += part / w;
    if (part % w != 0) ++alpha[part % w];
  }
  std::vector<int> parts;
  for (int f = w; f >= 1; --f) parts.insert(parts.end(), alpha[f], f);
  return Partition(std::move(parts));
}

Partition max_type_inverse(const Partition& type, int k1, int p1) {
  if (p1 < 0 || k1 < 0) throw PreconditionError("max_type_inverse: k1 and p1 must be nonnegative");
  const int w = p1 + 1;
  std::vector<int> alpha(w + 1, 0);
  for (int part : type.parts()) {
    if (part > w) throw PreconditionError("max_type_inverse: part exceeds p1 + 1");
    ++alpha[part];
  }
  // Each residue class mod w has exactly one representative in [k1, k1 + p1].
  std::vector<int> value(w, 0);
  for (int v = k1; v <= k1 + p1; ++v) value[v % w] = v;
  std::vector<int> count(w, 0);
  long long rest = alpha[w];
  for (int f = 1; f < w; ++f) {
    count[f] = alpha[f];
    rest -= static_cast<long long>(alpha[f]) * (value[f] / w);
  }
  const int per = value[0] / w;
  if (rest < 0) throw PreconditionError("max_type_inverse: type is not of the stated form");
  if (per == 0) {
    if (rest != 0) throw PreconditionError("max_type_inverse: type is not of the stated form");
  } else {
    if (rest % per != 0) throw PreconditionError("max_type_inverse: type is not of the stated form");
    count[0] = static_cast<int>(rest / per);
  }
  std::vector<int> parts;
  for (int v = k1 + p1; v >= k1; --v) {
    if (v > 0) parts.insert(parts.end(), count[v % w], v);
  }
  return Partition(std::move(parts));
}

SeriesTable SeriesTable::monomial(int r, int s, const Integer& c) {
  SeriesTable out;
  out.add(r, s, c);
  return out;
}

Integer SeriesTable::at(int r, int s) const {
  auto it = entries_.find({r, s});
  return it == entries_.end() ? Integer(0) : it->second;
}

void SeriesTable::add(int r, int s, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = entries_.try_emplace({r, s}, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) entries_.erase(it);
  }
}

SeriesTable SeriesTable::operator*(const SeriesTable& o) const {
  SeriesTable out;
  for (const auto& [k1, c1] : entries_) {
    for (const auto& [k2, c2] : o.entries_) out.add(k1.first + k2.first, k1.second + k2.second, c1 * c2);
  }
  return out;
}

SeriesTable SeriesTable::times_truncated(const SeriesTable& o, int R, int S) const {
  SeriesTable out;
  for (const auto& [k1, c1] : entries_) {
    if (k1.first > R || k1.second > S) continue;
    for (const auto& [k2, c2] : o.entries_) {
      const int r = k1.first + k2.first, s = k1.second + k2.second;
      if (r <= R && s <= S) out.add(r, s, c1 * c2);
    }
  }
  return out;
}

SeriesTable SeriesTable::operator+(const SeriesTable& o) const {
  SeriesTable out = *this;
  return out += o;
}

SeriesTable& SeriesTable::operator+=(const SeriesTable& o) {
  for (const auto& [k, c] : o.entries_) add(k.first, k.second, c);
  return *this;
}

SeriesTable SeriesTable::truncated(int R, int S) const {
  SeriesTable out;
  for (const auto& [k, c] : entries_) {
    if (k.first <= R && k.second <= S) out.entries_.emplace(k, c);
  }
  return out;
}

Integer SeriesTable::total() const {
  Integer t = 0;
  for (const auto& [k, c] : entries_) t += c;
  return t;
}

std::string SeriesTable::to_json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [k, c] : entries_) {
    if (!c.fits_slong_p()) throw ResourceError("series coefficient does not fit a JSON integer");
    arr.push_back({k.first, k.second, c.get_si()});
  }
  return arr.dump();
}

std::string SeriesTable::to_string() const {
  if (entries_.empty()) return "0";
  std::vector<std::pair<Key, Integer>> terms(entries_.begin(), entries_.end());
  std::stable_sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
    const int da = a.first.first + a.first.second, db = b.first.first + b.first.second;
    if (da != db) return da < db;
    return a.first.first > b.first.first;
  });
  std::string out;
  bool first = true;
  for (const auto& [k, c] : terms) {
    Integer mag = abs(c);
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += (c < 0) ? " - " : " + ";
    }
    first = false;
    std::string mono;
    if (k.first > 0) mono += (k.first == 1) ? "t" : "t^" + std::to_string(k.first);
    if (k.second > 0) mono += (k.second == 1) ? "q" : "q^" + std::to_string(k.second);
    if (mono.empty() || mag != 1) out += mag.get_str();
    out += mono;
  }
  return out;
}

SeriesTable rising_factorial(int j, Vars v) {
  if (j < 0) throw PreconditionError("rising_factorial: j must be nonnegative");
  return from_uni(uni_rising(j), v);
}

SeriesTable gaussian_binomial(int n, int k, Vars v) {
  if (k < 0 || k > n) {
    if (n >= 0) return SeriesTable();
    throw PreconditionError("gaussian_binomial: n must be nonnegative");
  }
  UniPoly q = uni_divide(uni_rising(n), uni_mul(uni_rising(k), uni_rising(n - k)));
  for (const auto& c : q) {
    if (c < 0) throw ConsistencyError("gaussian_binomial: negative coefficient");
  }
  return from_uni(q, v);
}

SeriesTable inverse_rising(int j, int max_degree, Vars v) {
  if (j < 0 || max_degree < 0) throw PreconditionError("inverse_rising: arguments must be nonnegative");
  // Partitions with parts at most j, counted by size.
  UniPoly c(max_degree + 1, Integer(0));
  c[0] = 1;
  for (int part = 1; part <= j; ++part) {
    for (int d = part; d <= max_degree; ++d) c[d] += c[d - part];
  }
  return from_uni(c, v);
}

Integer binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

Integer factorial(int n) {
  if (n < 0) throw PreconditionError("factorial: n must be nonnegative");
  Integer out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return out;
}

}  // namespace hollowgh
