#include "hollowgh/bitab.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>

#include "hollowgh/echelon.hpp"
#include "hollowgh/errors.hpp"

namespace hollowgh {

namespace {

void check_labels(const Tableau& s) {
  label_positions(s);  // throws unless s holds 1..n once each
}

// Label groups (0-based) of the columns or rows of s.
std::vector<std::vector<int>> stabilizer_groups(const Tableau& s, bool columns) {
  std::vector<std::vector<int>> groups;
  if (columns) {
    for (int c = 0; s.num_rows() > 0 && c < s.row_length(0); ++c) {
      std::vector<int> g;
      for (int r = 0; r < s.num_rows() && c < s.row_length(r); ++r) g.push_back(s.at(r, c) - 1);
      groups.push_back(std::move(g));
    }
  } else {
    for (const auto& row : s.rows()) {
      std::vector<int> g;
      for (int v : row) g.push_back(v - 1);
      groups.push_back(std::move(g));
    }
  }
  return groups;
}

struct ContentBasis {
  std::vector<Bitableau> elements;
  Echelon echelon;
};

std::mutex cache_mutex;
std::map<std::pair<int, std::vector<ACell>>, std::shared_ptr<const ContentBasis>> basis_cache;

std::shared_ptr<const ContentBasis> content_basis(BitabKind kind, const std::vector<ACell>& kappa) {
  const auto key = std::make_pair(static_cast<int>(kind), kappa);
  {
    std::lock_guard<std::mutex> lock(cache_mutex);
    if (auto it = basis_cache.find(key); it != basis_cache.end()) return it->second;
  }
  const int n = static_cast<int>(kappa.size());
  auto basis = std::make_shared<ContentBasis>(ContentBasis{standard_bitableaux(kappa), Echelon(n, true)});
  for (const auto& b : basis->elements) {
    if (!basis->echelon.insert(build_bitableau(kind, b.left, b.right)).independent) {
      throw ConsistencyError("straighten: standard bitableaux of content are linearly dependent");
    }
  }
  std::lock_guard<std::mutex> lock(cache_mutex);
  basis_cache.emplace(key, basis);
  return basis;
}

OrderMode order_for(BitabKind kind) { return kind == BitabKind::det ? OrderMode::det : OrderMode::per; }

}  // namespace

SparsePoly build_bitableau(BitabKind kind, const Tableau& s, const AFilling& u) {
  if (s.shape() != u.shape()) throw PreconditionError("bitableau: shapes of S and U differ");
  check_labels(s);
  const int n = s.size();
  if (n > kMaxVars) throw ResourceError("bitableau: n exceeds the supported variable count");
  const auto exps = read_by(s, u);
  for (const auto& e : exps) {
    if (e.a < 0 || e.b < 0 || e.a > 255 || e.b > 255) throw PreconditionError("bitableau: entry outside N^2");
  }
  const auto groups = stabilizer_groups(s, kind == BitabKind::det);
  std::vector<int> sigma(n);
  std::iota(sigma.begin(), sigma.end(), 0);
  TermAccumulator acc(n);
  auto rec = [&](auto&& self, std::size_t g, int sign) -> void {
    if (g == groups.size()) {
      Monomial m;
      for (int i = 0; i < n; ++i) {
        m.x(sigma[i]) = static_cast<std::uint8_t>(exps[i].a);
        m.y(sigma[i]) = static_cast<std::uint8_t>(exps[i].b);
      }
      acc.add(m, kind == BitabKind::det ? sign : 1);
      return;
    }
    const auto& grp = groups[g];
    std::vector<int> image(grp);
    std::sort(image.begin(), image.end());
    std::vector<int> local(grp.size());
    do {
      // Sign of the group-local permutation grp[k] -> image[k].
      for (std::size_t k = 0; k < grp.size(); ++k) {
        local[k] = static_cast<int>(std::find(grp.begin(), grp.end(), image[k]) - grp.begin());
        sigma[grp[k]] = image[k];
      }
      self(self, g + 1, sign * permutation_sign(local));
    } while (std::next_permutation(image.begin(), image.end()));
    for (int v : grp) sigma[v] = v;
  };
  rec(rec, 0, 1);
  return acc.finish();
}

std::vector<Bitableau> standard_bitableaux(const std::vector<ACell>& content_multiset) {
  const int n = static_cast<int>(content_multiset.size());
  std::vector<ACell> values(content_multiset);
  std::sort(values.begin(), values.end());
  std::vector<ACell> distinct;
  std::vector<int> counts;
  for (const auto& v : values) {
    if (distinct.empty() || distinct.back() != v) {
      distinct.push_back(v);
      counts.push_back(0);
    }
    ++counts.back();
  }
  std::vector<Bitableau> out;
  for (const auto& lam : partitions_of(n)) {
    auto syt = enumerate_syt(n, lam);
    std::vector<AFilling> fillings;
    std::vector<std::vector<ACell>> rows(lam.length());
    auto rec = [&](auto&& self, int r, int c) -> void {
      if (r == lam.length()) {
        fillings.emplace_back(rows);
        return;
      }
      if (c == lam[r]) {
        self(self, r + 1, 0);
        return;
      }
      for (std::size_t k = 0; k < distinct.size(); ++k) {
        if (counts[k] == 0) continue;
        const ACell& v = distinct[k];
        if (c > 0 && v < rows[r][c - 1]) continue;
        if (r > 0 && !(rows[r - 1][c] < v)) continue;
        --counts[k];
        rows[r].push_back(v);
        self(self, r, c + 1);
        rows[r].pop_back();
        ++counts[k];
      }
    };
    rec(rec, 0, 0);
    for (const auto& t : syt) {
      for (const auto& v : fillings) out.push_back(Bitableau{t, v});
    }
  }
  return out;
}

StraightenResult straighten(BitabKind kind, const Tableau& s, const AFilling& u) {
  if (s.shape() != u.shape()) throw PreconditionError("straighten: shapes of S and U differ");
  check_labels(s);
  const SparsePoly target = build_bitableau(kind, s, u);
  auto basis = content_basis(kind, content(u));
  auto coords = basis->echelon.express(target);
  if (!coords) throw ConsistencyError("straighten: polynomial lies outside the standard span");

  StraightenResult result;
  const Bitableau input{s, u};
  SparsePoly check(s.size());
  for (const auto& [idx, coef] : *coords) {
    const auto& b = basis->elements[idx];
    result.terms.push_back(StraightenTerm{b.left, b.right, coef});
    check += build_bitableau(kind, b.left, b.right) * coef;
  }
  if (!(check == target)) throw ConsistencyError("straighten: expansion does not re-evaluate to the input");

  const OrderMode mode = order_for(kind);
  std::sort(result.terms.begin(), result.terms.end(), [mode](const StraightenTerm& a, const StraightenTerm& b) {
    return compare_bitableaux({a.t, a.v}, {b.t, b.v}, mode) < 0;
  });
  result.input_standard = is_standard(s) && is_column_strict(u);
  result.integral = std::all_of(result.terms.begin(), result.terms.end(),
                                [](const StraightenTerm& t) { return t.coefficient.get_den() == 1; });
  result.triangular = true;
  if (!result.input_standard) {
    for (const auto& term : result.terms) {
      if (compare_bitableaux({term.t, term.v}, input, mode) <= 0) result.triangular = false;
    }
  }
  return result;
}

namespace {

struct PhiSetup {
  int n = 0;
  std::vector<int> iota;        // 0-based one-line
  std::vector<ACell> c_by_label;  // c^T_i
  std::vector<Cell> pos;        // cell of i in T
};

PhiSetup phi_setup(const Tableau& t, const AFilling& c, const LatticeDiagram& alpha) {
  if (!is_standard(t)) throw PreconditionError("per_applied_to_delta: T is not standard");
  if (t.shape() != c.shape()) throw PreconditionError("per_applied_to_delta: shapes of T and C differ");
  PhiSetup s;
  s.n = t.size();
  if (static_cast<int>(alpha.size()) != s.n) throw PreconditionError("per_applied_to_delta: |alpha| differs from n");
  const Tableau std_c = standardize(c);
  for (int v : read_by(t, std_c)) s.iota.push_back(v - 1);
  s.c_by_label = read_by(t, c);
  s.pos = label_positions(t);
  return s;
}

// E_phi entries by label and d_phi; false when an entry has a negative coordinate.
bool e_entries(const PhiSetup& s, const LatticeDiagram& alpha, const std::vector<int>& phi,
               std::vector<ACell>& entries, Integer& d) {
  entries.resize(s.n);
  d = 1;
  for (int i = 0; i < s.n; ++i) {
    const ACell& a = alpha[phi[s.iota[i]]];
    const ACell& c = s.c_by_label[i];
    ACell e{a.a - c.a, a.b - c.b};
    if (e.a < 0 || e.b < 0) return false;
    entries[i] = e;
    d *= falling_factorial(a.a, c.a) * falling_factorial(a.b, c.b);
  }
  return true;
}

bool row_repeats(const Tableau& t, const std::vector<ACell>& entries) {
  for (const auto& row : t.rows()) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      for (std::size_t j = i + 1; j < row.size(); ++j) {
        if (entries[row[i] - 1] == entries[row[j] - 1]) return true;
      }
    }
  }
  return false;
}

}  // namespace

Integer d_phi(const Tableau& t, const AFilling& c, const LatticeDiagram& alpha, const std::vector<int>& phi) {
  PhiSetup s = phi_setup(t, c, alpha);
  if (static_cast<int>(phi.size()) != s.n) throw PreconditionError("d_phi: phi has the wrong length");
  std::vector<int> p;
  for (int v : phi) p.push_back(v - 1);
  std::vector<ACell> entries;
  Integer d;
  if (!e_entries(s, alpha, p, entries, d)) return 0;
  if (row_repeats(t, entries)) return 0;
  return d;
}

PerDeltaExpansion per_applied_to_delta(const Tableau& t, const AFilling& c, const LatticeDiagram& alpha, int cap_n) {
  PhiSetup s = phi_setup(t, c, alpha);
  if (s.n > cap_n) throw ResourceError("per_applied_to_delta: n exceeds cap " + std::to_string(cap_n));
  PerDeltaExpansion out;
  for (int v : s.iota) out.iota.push_back(v + 1);
  out.iota_sign = permutation_sign(s.iota);
  out.value = SparsePoly(s.n);
  const Tableau tt = t.transpose();
  std::vector<int> phi(s.n);
  std::iota(phi.begin(), phi.end(), 0);
  std::vector<ACell> entries;
  Integer d;
  do {
    if (!e_entries(s, alpha, phi, entries, d)) continue;
    if (d == 0 || row_repeats(t, entries)) continue;
    AFilling e = c;
    for (int i = 0; i < s.n; ++i) e.at(s.pos[i].row, s.pos[i].col) = entries[i];
    EPhiTerm term;
    for (int v : phi) term.phi.push_back(v + 1);
    term.phi_sign = permutation_sign(phi);
    term.diagram = e;
    term.d = d;
    out.value += build_bitableau(BitabKind::det, tt, e.transpose()) * Rational(d * term.phi_sign * out.iota_sign);
    out.terms.push_back(std::move(term));
  } while (std::next_permutation(phi.begin(), phi.end()));
  return out;
}

std::vector<int> permutation_from_cycles(int n, const std::string& cycles) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 1);
  std::size_t i = 0;
  while (i < cycles.size()) {
    if (std::isspace(static_cast<unsigned char>(cycles[i]))) {
      ++i;
      continue;
    }
    if (cycles[i] != '(') throw ParseError(i, "expected '('");
    std::size_t close = cycles.find(')', i);
    if (close == std::string::npos) throw ParseError(i, "unterminated cycle");
    std::vector<int> cyc;
    std::size_t j = i + 1;
    while (j < close) {
      std::size_t start = j;
      int v = 0;
      while (j < close && std::isdigit(static_cast<unsigned char>(cycles[j]))) v = v * 10 + (cycles[j++] - '0');
      if (j == start) throw ParseError(j, "expected a label");
      if (v < 1 || v > n) throw ParseError(start, "label outside 1.." + std::to_string(n));
      cyc.push_back(v);
      if (j < close && cycles[j] == ',') ++j;
    }
    // Cycles compose right to left; a fresh cycle acts first.
    std::vector<int> c(n);
    std::iota(c.begin(), c.end(), 1);
    for (std::size_t k = 0; k < cyc.size(); ++k) c[cyc[k] - 1] = cyc[(k + 1) % cyc.size()];
    std::vector<int> composed(n);
    for (int x = 0; x < n; ++x) composed[x] = perm[c[x] - 1];
    perm = composed;
    i = close + 1;
  }
  return perm;
}

}  // namespace hollowgh
