#include "hollowgh/tableaux.hpp"

#include <cctype>
#include <numeric>

namespace hollowgh {

namespace {

constexpr std::string_view kMacron = "\xCC\x84";   // U+0304, marks (0,b)
constexpr std::string_view kLowLine = "\xCC\xB2";  // U+0332, marks (a,0)

std::string marked(int v, std::string_view mark) {
  std::string digits = std::to_string(v);
  std::string out;
  for (char ch : digits) {
    out += ch;
    out += mark;
  }
  return out;
}

template <typename T, typename R>
std::string join_rows(const Filling<T>& f, R&& render) {
  std::string out;
  for (int r = 0; r < f.num_rows(); ++r) {
    if (r > 0) out += " / ";
    for (int c = 0; c < f.row_length(r); ++c) {
      if (c > 0) out += ' ';
      out += render(f.at(r, c));
    }
  }
  return out;
}

// Splits "a b / c" into rows of (token, offset).
std::vector<std::vector<std::pair<std::string_view, std::size_t>>> tokenize_rows(std::string_view text) {
  std::vector<std::vector<std::pair<std::string_view, std::size_t>>> rows(1);
  std::size_t i = 0;
  while (i < text.size()) {
    char ch = text[i];
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++i;
    } else if (ch == '/') {
      if (rows.back().empty()) throw ParseError(i, "empty row before '/'");
      rows.emplace_back();
      ++i;
    } else if (ch == '(') {
      std::size_t close = text.find(')', i);
      if (close == std::string_view::npos) throw ParseError(i, "unterminated '('");
      rows.back().emplace_back(text.substr(i, close - i + 1), i);
      i = close + 1;
    } else {
      std::size_t j = i;
      while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j])) && text[j] != '/') ++j;
      rows.back().emplace_back(text.substr(i, j - i), i);
      i = j;
    }
  }
  if (rows.back().empty()) throw ParseError(text.size(), "empty row");
  return rows;
}

template <typename T, typename F>
Filling<T> parse_rows(std::string_view text, F&& parse_entry) {
  auto tokens = tokenize_rows(text);
  std::vector<std::vector<T>> rows;
  for (std::size_t r = 0; r < tokens.size(); ++r) {
    std::vector<T> row;
    for (const auto& [tok, off] : tokens[r]) {
      try {
        row.push_back(parse_entry(tok));
      } catch (const ParseError& e) {
        throw ParseError(off + e.position(), e.detail());
      }
    }
    if (r > 0 && row.size() > rows.back().size()) {
      throw ParseError(tokens[r].front().second, "row longer than the row below");
    }
    rows.push_back(std::move(row));
  }
  return Filling<T>(std::move(rows));
}

int parse_int(std::string_view s, std::size_t offset) {
  if (s.empty()) throw ParseError(offset, "expected an integer");
  std::size_t i = 0;
  bool neg = false;
  if (s[0] == '-' || s[0] == '+') {
    neg = s[0] == '-';
    i = 1;
  }
  if (i == s.size()) throw ParseError(offset + i, "expected digits");
  long long v = 0;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) throw ParseError(offset + i, "expected a digit");
    v = v * 10 + (s[i] - '0');
    if (v > 1000000) throw ParseError(offset + i, "integer too large");
  }
  return static_cast<int>(neg ? -v : v);
}

}  // namespace

std::strong_ordering compare_alphabet(const ACell& u, const ACell& v) { return u <=> v; }

std::string to_string(const ACell& c) {
  if (!c.in_A()) return "(" + std::to_string(c.a) + "," + std::to_string(c.b) + ")";
  if (c.b > 0) return marked(c.b, kMacron);
  if (c.a > 0) return marked(c.a, kLowLine);
  return "0";
}

ACell parse_acell(std::string_view s) {
  if (s.empty()) throw ParseError(0, "empty entry");
  if (s.front() == '(') {
    std::size_t comma = s.find(',');
    if (comma == std::string_view::npos) throw ParseError(0, "expected '(a,b)'");
    if (s.back() != ')') throw ParseError(s.size() - 1, "expected ')'");
    int a = parse_int(s.substr(1, comma - 1), 1);
    int b = parse_int(s.substr(comma + 1, s.size() - comma - 2), comma + 1);
    if (a < 0 || b < 0) throw ParseError(1, "coordinates must be nonnegative");
    return ACell{a, b};
  }
  // Digits, each optionally followed by the same combining mark.
  std::string digits;
  std::string_view mark;
  std::size_t i = 0;
  bool ascii_sign = false;
  if (s[0] == '-' || s[0] == '+') {
    ascii_sign = true;
    digits += s[0];
    i = 1;
  }
  while (i < s.size()) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) throw ParseError(i, "expected a digit");
    digits += s[i++];
    for (std::string_view m : {kMacron, kLowLine}) {
      if (s.substr(i, m.size()) == m) {
        if (ascii_sign) throw ParseError(i, "sign and combining mark together");
        if (!mark.empty() && mark != m) throw ParseError(i, "mixed combining marks");
        mark = m;
        i += m.size();
      }
    }
  }
  int v = parse_int(digits, 0);
  if (mark == kMacron) return ACell{0, v};
  return ACell::from_signed(v);
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw PreconditionError("partition: parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw PreconditionError("partition: parts must be weakly decreasing");
  }
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

Partition Partition::transpose() const {
  std::vector<int> t;
  if (parts_.empty()) return Partition();
  for (int c = 0; c < parts_[0]; ++c) {
    int h = 0;
    while (h < length() && parts_[h] > c) ++h;
    t.push_back(h);
  }
  return Partition(std::move(t));
}

std::string Partition::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out + ")";
}

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int rest, int max_part) -> void {
    if (rest == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(rest, max_part); p >= 1; --p) {
      cur.push_back(p);
      self(self, rest - p, p);
      cur.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

long long hook_length_count(const Partition& shape) {
  Partition t = shape.transpose();
  long long num = 1;
  for (int i = 2; i <= shape.size(); ++i) num *= i;
  long long den = 1;
  for (int r = 0; r < shape.length(); ++r) {
    for (int c = 0; c < shape[r]; ++c) den *= (shape[r] - c - 1) + (t[c] - r - 1) + 1;
  }
  return num / den;
}

bool is_standard(const Tableau& t) {
  const int n = t.size();
  std::vector<bool> seen(n + 1, false);
  for (const auto& row : t.rows()) {
    for (int v : row) {
      if (v < 1 || v > n || seen[v]) return false;
      seen[v] = true;
    }
  }
  return is_column_strict(t);
}

std::vector<Cell> label_positions(const Tableau& t) {
  const int n = t.size();
  std::vector<Cell> pos(n, Cell{-1, -1});
  for (int r = 0; r < t.num_rows(); ++r) {
    for (int c = 0; c < t.row_length(r); ++c) {
      int v = t.at(r, c);
      if (v < 1 || v > n || pos[v - 1].row >= 0) {
        throw PreconditionError("tableau entries must be a permutation of 1.." + std::to_string(n));
      }
      pos[v - 1] = {r, c};
    }
  }
  return pos;
}

std::vector<Tableau> enumerate_syt(int n, const std::optional<Partition>& shape, int cap_n) {
  if (n > cap_n) throw ResourceError("enumerate_syt: n = " + std::to_string(n) + " exceeds cap " + std::to_string(cap_n));
  if (n < 0) throw PreconditionError("enumerate_syt: n must be nonnegative");
  std::vector<Partition> shapes;
  if (shape) {
    if (shape->size() != n) throw PreconditionError("enumerate_syt: shape size differs from n");
    shapes.push_back(*shape);
  } else {
    shapes = partitions_of(n);
  }
  std::vector<Tableau> out;
  for (const auto& lam : shapes) {
    std::vector<std::vector<int>> rows(lam.length());
    auto rec = [&](auto&& self, int next) -> void {
      if (next > n) {
        out.emplace_back(rows);
        return;
      }
      for (int r = 0; r < lam.length(); ++r) {
        const int len = static_cast<int>(rows[r].size());
        if (len >= lam[r]) continue;
        if (r > 0 && static_cast<int>(rows[r - 1].size()) <= len) continue;
        rows[r].push_back(next);
        self(self, next + 1);
        rows[r].pop_back();
      }
    };
    rec(rec, 1);
  }
  std::sort(out.begin(), out.end(), [](const Tableau& a, const Tableau& b) { return rowseq(a) < rowseq(b); });
  return out;
}

Tableau cocharge_pi(const Tableau& t) {
  if (!is_standard(t)) throw PreconditionError("cocharge_pi: tableau is not standard");
  auto pos = label_positions(t);
  Tableau out = t.map([](int) { return 0; });
  int value = 0;
  for (std::size_t i = 1; i < pos.size(); ++i) {
    if (pos[i].row > pos[i - 1].row) ++value;
    out.at(pos[i].row, pos[i].col) = value;
  }
  return out;
}

AFilling cocharge_diagram(int pivot, const Tableau& t) {
  const int n = t.size();
  if (pivot < 1 || pivot > n) {
    throw PreconditionError("cocharge_diagram: pivot " + std::to_string(pivot) + " outside 1.." + std::to_string(n));
  }
  Tableau pi = cocharge_pi(t);
  auto pos = label_positions(t);
  const int v0 = pi.at(pos[pivot - 1].row, pos[pivot - 1].col);
  return pi.map([v0](int v) { return ACell::from_signed(v - v0); });
}

Decomposition decompose_columnstrict(int pivot, const AFilling& u) {
  const int n = u.size();
  for (const auto& row : u.rows()) {
    for (const auto& e : row) {
      if (!e.in_A()) throw PreconditionError("decompose: entry " + to_string(e) + " is not in A");
    }
  }
  if (!is_column_strict(u)) throw PreconditionError("decompose: filling is not column-strict");
  if (pivot < 1 || pivot > n) throw PreconditionError("decompose: pivot outside 1..n");
  Tableau t = standardize(u);
  Decomposition d;
  d.cochg = cocharge_diagram(pivot, t);
  auto us = read_by(t, u);
  auto cs = read_by(t, d.cochg);
  if (us[pivot - 1] != ACell{}) {
    throw PreconditionError("decompose: index " + std::to_string(pivot) + " holds " + to_string(us[pivot - 1]) +
                            ", expected 0");
  }
  for (int i = 0; i < n; ++i) {
    ACell a{us[i].a - cs[i].a, us[i].b - cs[i].b};
    if (a.a < 0 || a.b < 0 || !a.in_A()) {
      throw PreconditionError("decompose: index " + std::to_string(i + 1) + " gives " + to_string(us[i]) + " - " +
                              to_string(cs[i]) + " outside A");
    }
    if (i > 0 && a < d.alpha.back()) {
      throw ConsistencyError("decompose: alpha decreases at index " + std::to_string(i + 1));
    }
    d.alpha.push_back(a);
  }
  return d;
}

AFilling compose_columnstrict(int pivot, const Tableau& t, const std::vector<ACell>& alpha) {
  const int n = t.size();
  if (static_cast<int>(alpha.size()) != n) throw PreconditionError("compose: alpha has the wrong length");
  for (int i = 0; i < n; ++i) {
    if (!alpha[i].in_A()) throw PreconditionError("compose: index " + std::to_string(i + 1) + " is not in A");
    if (i > 0 && alpha[i] < alpha[i - 1]) {
      throw PreconditionError("compose: alpha decreases at index " + std::to_string(i + 1));
    }
  }
  if (pivot < 1 || pivot > n || alpha[pivot - 1] != ACell{}) {
    throw PreconditionError("compose: index " + std::to_string(pivot) + " must hold 0");
  }
  AFilling c = cocharge_diagram(pivot, t);
  auto pos = label_positions(t);
  AFilling u = c;
  for (int i = 0; i < n; ++i) {
    ACell& e = u.at(pos[i].row, pos[i].col);
    e = ACell{e.a + alpha[i].a, e.b + alpha[i].b};
    if (!e.in_A()) throw PreconditionError("compose: index " + std::to_string(i + 1) + " leaves A");
  }
  if (!is_column_strict(u) || standardize(u) != t) throw ConsistencyError("compose: result does not standardize to T");
  return u;
}

namespace {

template <typename T>
std::vector<T> concat(std::vector<T> a, const std::vector<T>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

std::strong_ordering reverse(std::strong_ordering o) { return 0 <=> o; }

}  // namespace

std::strong_ordering compare_bitableaux(const Bitableau& x, const Bitableau& y, OrderMode mode, int pivot) {
  const int n = x.left.size();
  if (y.left.size() != n || x.right.size() != n || y.right.size() != n) {
    throw PreconditionError("compare_bitableaux: bitableaux on different numbers of cells");
  }
  if (x.left.shape() != x.right.shape() || y.left.shape() != y.right.shape()) {
    throw PreconditionError("compare_bitableaux: bitableau sides have different shapes");
  }
  switch (mode) {
    case OrderMode::det: {
      if (auto c = x.left.shape().transpose() <=> y.left.shape().transpose(); c != 0) return c;
      if (auto c = content(x.right) <=> content(y.right); c != 0) return reverse(c);
      if (auto c = colseq(x.left) <=> colseq(y.left); c != 0) return reverse(c);
      return reverse(colseq(x.right) <=> colseq(y.right));
    }
    case OrderMode::per: {
      if (auto c = x.left.shape() <=> y.left.shape(); c != 0) return c;
      if (auto c = content(x.right) <=> content(y.right); c != 0) return c;
      if (auto c = rowseq(x.left) <=> rowseq(y.left); c != 0) return reverse(c);
      return reverse(rowseq(x.right) <=> rowseq(y.right));
    }
    case OrderMode::bitab: {
      if (pivot < 1 || pivot > n) throw PreconditionError("compare_bitableaux: pivot outside 1..n");
      if (auto c = x.left.shape().transpose() <=> y.left.shape().transpose(); c != 0) return c;
      auto kx = content(x.right);
      auto ky = content(y.right);
      std::vector<ACell> conx_x(kx.begin() + pivot, kx.end()), conx_y(ky.begin() + pivot, ky.end());
      if (auto c = conx_x <=> conx_y; c != 0) return reverse(c);
      std::vector<ACell> cony_x(kx.begin(), kx.begin() + pivot - 1), cony_y(ky.begin(), ky.begin() + pivot - 1);
      if (auto c = cony_x <=> cony_y; c != 0) return c;
      if (auto c = colseq(x.right) <=> colseq(y.right); c != 0) return c;
      return reverse(colseq(x.left) <=> colseq(y.left));
    }
  }
  return std::strong_ordering::equal;
}

std::strong_ordering compare_content(const std::vector<int>& a1, const std::vector<int>& b1,
                                     const std::vector<int>& a2, const std::vector<int>& b2) {
  if (a1.size() != a2.size() || b1.size() != b2.size()) {
    throw PreconditionError("compare_content: bracket parameters of different lengths");
  }
  if (auto c = a1 <=> a2; c != 0) return c;
  return b1 <=> b2;
}

std::string to_string(const Tableau& t) {
  return join_rows(t, [](int v) { return std::to_string(v); });
}

std::string to_string(const AFilling& u) {
  return join_rows(u, [](const ACell& c) { return to_string(c); });
}

Tableau parse_tableau(std::string_view text) {
  return parse_rows<int>(text, [](std::string_view tok) { return parse_int(tok, 0); });
}

AFilling parse_afilling(std::string_view text) {
  return parse_rows<ACell>(text, [](std::string_view tok) { return parse_acell(tok); });
}

}  // namespace hollowgh
