#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "hollowgh/bitab.hpp"
#include "hollowgh/cli.hpp"
#include "hollowgh/errors.hpp"
#include "hollowgh/latticediag.hpp"
#include "hollowgh/symfun.hpp"
#include "json.hpp"

namespace hollowgh::cli {

namespace {

using nlohmann::json;

ACell cell_of(const json& j) {
  if (j.is_number_integer()) return ACell::from_signed(j.get<int>());
  return parse_acell(j.get<std::string>());
}

LatticeDiagram cells_of(const json& j) {
  LatticeDiagram out;
  for (const auto& c : j) out.push_back(cell_of(c));
  return out;
}

std::vector<ACell> acells_of(const json& j) { return cells_of(j); }

Partition partition_of(const json& j) { return Partition(j.get<std::vector<int>>()); }

BitabKind kind_of(const json& j) {
  const auto s = j.get<std::string>();
  if (s == "det") return BitabKind::det;
  if (s == "per") return BitabKind::per;
  throw ParseError(0, "kind must be det or per");
}

std::string render(const std::vector<ACell>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + to_string(v[i]);
  return out + ")";
}

struct Check {
  bool pass = true;
  std::ostringstream detail;
  void expect(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << "mismatch: " << what << "; ";
    }
  }
};

void op_sym_operator_on_delta(const json& in, const json& ex, Check& c) {
  const auto cells = cells_of(in.at("cells"));
  const int n = static_cast<int>(cells.size());
  const auto& op = in.at("operator");
  const Vars v = op.at("vars").get<std::string>() == "Y" ? Vars::Y : Vars::X;
  const auto parts = op.at("parts").get<std::vector<int>>();
  SparsePoly sym = SparsePoly::constant(n, 1);
  for (int p : parts) sym = sym * (op.at("family").get<std::string>() == "e" ? elementary(n, p, v) : complete(n, p, v));
  const SparsePoly lhs = apply_diff(sym, delta(cells));
  SparsePoly rhs(n);
  for (const auto& t : ex.at("terms")) rhs += delta(cells_of(t.at("cells"))) * Rational(t.at("coefficient").get<long>());
  c.expect(lhs == rhs, "operator image differs from the expected determinant combination");
}

void op_bitableau(const json& in, const json& ex, Check& c) {
  const auto s = parse_tableau(in.at("left").get<std::string>());
  const auto u = parse_afilling(in.at("right").get<std::string>());
  const auto got = build_bitableau(kind_of(in.at("kind")), s, u);
  const auto want = parse_poly(s.size(), ex.at("value").get<std::string>());
  c.expect(got == want, "got " + got.to_string());
}

void op_straighten(const json& in, const json& ex, Check& c) {
  const auto s = parse_tableau(in.at("left").get<std::string>());
  const auto u = parse_afilling(in.at("right").get<std::string>());
  const auto r = straighten(kind_of(in.at("kind")), s, u);
  std::map<std::pair<std::string, std::string>, Rational> got, want;
  for (const auto& t : r.terms) got[{to_string(t.t), to_string(t.v)}] = t.coefficient;
  for (const auto& t : ex.at("terms")) {
    want[{to_string(parse_tableau(t.at("left").get<std::string>())),
          to_string(parse_afilling(t.at("right").get<std::string>()))}] = t.at("coefficient").get<long>();
  }
  c.expect(got == want, "straightening terms differ");
  c.expect(r.triangular, "expansion is not triangular");
  c.expect(r.integral, "non-integral coefficient");
}

void op_sequences(const json& in, const json& ex, Check& c) {
  const auto u = parse_afilling(in.at("filling").get<std::string>());
  c.expect(rowseq(u) == acells_of(ex.at("rowseq")), "rowseq " + render(rowseq(u)));
  c.expect(colseq(u) == acells_of(ex.at("colseq")), "colseq " + render(colseq(u)));
  c.expect(content(u) == acells_of(ex.at("content")), "content " + render(content(u)));
  c.expect(standardize(u) == parse_tableau(ex.at("standardized").get<std::string>()),
           "standardized " + to_string(standardize(u)));
}

void op_order(const json& in, const json& ex, Check& c) {
  const auto side = [](const json& j) {
    return Bitableau{parse_tableau(j.at("left").get<std::string>()), parse_afilling(j.at("right").get<std::string>())};
  };
  const auto mode_s = in.at("mode").get<std::string>();
  const OrderMode mode = mode_s == "det" ? OrderMode::det : mode_s == "per" ? OrderMode::per : OrderMode::bitab;
  const auto ord = compare_bitableaux(side(in.at("a")), side(in.at("b")), mode, in.value("pivot", 0));
  const std::string got = ord < 0 ? "less" : ord > 0 ? "greater" : "equal";
  c.expect(got == ex.at("order").get<std::string>(), "order " + got);
}

void op_macmahon_product(const json& in, const json& ex, Check& c) {
  const auto t = parse_tableau(in.at("left").get<std::string>());
  const auto u = parse_afilling(in.at("right").get<std::string>());
  const auto lhs = macmahon(acells_of(in.at("beta"))) * build_bitableau(BitabKind::per, t, u);
  SparsePoly rhs(t.size());
  for (const auto& term : ex.at("terms")) {
    rhs += build_bitableau(BitabKind::per, t, parse_afilling(term.at("right").get<std::string>())) *
           Rational(term.at("coefficient").get<long>());
  }
  c.expect(lhs == rhs, "product differs from the expected bipermanent combination");
}

void op_domino(const json& in, const json& ex, Check& c) {
  const auto lam = partition_of(in.at("lambda"));
  const auto mu = partition_of(in.at("mu"));
  c.expect(domino_count(lam, mu) == ex.at("count").get<long>(), "count " + domino_count(lam, mu).get_str());
  c.expect(h_to_e_coefficient(lam, mu) == ex.at("h_to_e_coefficient").get<long>(),
           "h-to-e coefficient " + h_to_e_coefficient(lam, mu).get_str());
}

void op_max_type(const json& in, const json& ex, Check& c) {
  const auto lam = partition_of(in.at("lambda"));
  const int p1 = in.at("p1").get<int>();
  const auto type = max_type(lam, p1);
  c.expect(type == partition_of(ex.at("type")), "type " + type.to_string());
  const auto back = max_type_inverse(partition_of(ex.at("type")), in.at("k1").get<int>(), p1);
  c.expect(back == partition_of(ex.at("inverse")), "inverse " + back.to_string());
}

void op_d_phi(const json& in, const json& ex, Check& c) {
  const auto t = parse_tableau(in.at("left").get<std::string>());
  const auto u = parse_afilling(in.at("right").get<std::string>());
  const auto cells = cells_of(in.at("cells"));
  const int n = t.size();
  const auto ex_all = per_applied_to_delta(t, u, cells);
  c.expect(ex_all.iota == permutation_from_cycles(n, ex.at("iota").get<std::string>()), "iota");
  for (const auto& [cyc, d] : ex.at("d").items()) {
    const Integer got = d_phi(t, u, cells, permutation_from_cycles(n, cyc));
    c.expect(got == d.get<long>(), "d" + cyc + " = " + got.get_str());
  }
  c.expect(ex_all.value == apply_diff(build_bitableau(BitabKind::per, t, u), delta(cells)),
           "assembled expansion differs from direct differentiation");
}

void op_per_on_delta(const json& in, const json& ex, Check& c) {
  const auto t = parse_tableau(in.at("left").get<std::string>());
  const auto u = parse_afilling(in.at("right").get<std::string>());
  const auto cells = cells_of(in.at("cells"));
  const auto e = per_applied_to_delta(t, u, cells);
  c.expect(e.value == parse_poly(t.size(), ex.at("value").get<std::string>()), "value " + e.value.to_string());
  std::vector<int> id(static_cast<std::size_t>(t.size()));
  for (std::size_t i = 0; i < id.size(); ++i) id[i] = static_cast<int>(i) + 1;
  c.expect(d_phi(t, u, cells, id) == ex.at("d_identity").get<long>(), "d_identity");
  c.expect(e.value == apply_diff(build_bitableau(BitabKind::per, t, u), delta(cells)), "direct differentiation");
}

void op_decompose(const json& in, const json& ex, Check& c) {
  const int pivot = in.at("pivot").get<int>();
  const auto u = parse_afilling(in.at("filling").get<std::string>());
  const auto d = decompose_columnstrict(pivot, u);
  c.expect(d.alpha == acells_of(ex.at("alpha")), "alpha " + render(d.alpha));
  c.expect(compose_columnstrict(pivot, standardize(u), d.alpha) == u, "recomposition");
}

void op_hollow_cells(const json& in, const json& ex, Check& c) {
  const auto g = HollowGamma::parse(in.at("gamma").get<std::string>());
  const auto cells = hollow_cells(g);
  c.expect(static_cast<int>(cells.size()) == ex.at("n").get<int>(), "n = " + std::to_string(cells.size()));
  if (ex.contains("cells")) c.expect(cells == cells_of(ex.at("cells")), "cells " + to_string(cells));
}

void op_bracket(const json& in, const json& ex, Check& c) {
  const auto g = HollowGamma::parse(in.at("gamma").get<std::string>());
  LatticeDiagram got;
  got = bracket_diagram(g, in.at("a").get<std::vector<int>>(), in.at("b").get<std::vector<int>>());
  LatticeDiagram want;
  for (const auto& p : ex.at("cells")) want.push_back({p.at(0).get<int>(), p.at(1).get<int>()});
  c.expect(got == want, "cells " + to_string(got));
}

const std::map<std::string, std::function<void(const json&, const json&, Check&)>>& ops() {
  static const std::map<std::string, std::function<void(const json&, const json&, Check&)>> table{
      {"sym_operator_on_delta", op_sym_operator_on_delta},
      {"bitableau", op_bitableau},
      {"straighten", op_straighten},
      {"sequences", op_sequences},
      {"order", op_order},
      {"macmahon_product", op_macmahon_product},
      {"domino", op_domino},
      {"max_type", op_max_type},
      {"d_phi", op_d_phi},
      {"per_on_delta", op_per_on_delta},
      {"decompose", op_decompose},
      {"hollow_cells", op_hollow_cells},
      {"bracket", op_bracket},
  };
  return table;
}

}  // namespace

std::string default_golden_dir() {
#ifdef HOLLOWGH_DATA_DIR
  return std::string(HOLLOWGH_DATA_DIR) + "/golden";
#else
  return "data/golden";
#endif
}

GoldenOutcome replay_golden_file(const std::string& path) {
  GoldenOutcome out;
  out.file = std::filesystem::path(path).filename().string();
  std::ifstream in(path);
  if (!in) {
    out.detail = "cannot open " + path;
    return out;
  }
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(e.byte, out.file + ": " + e.what());
  }
  out.ref = doc.value("ref", "");
  const auto& input = doc.at("input");
  const auto op = input.at("op").get<std::string>();
  const auto it = ops().find(op);
  if (it == ops().end()) {
    out.detail = "unknown op " + op;
    return out;
  }
  Check c;
  try {
    it->second(input, doc.at("expected"), c);
  } catch (const json::exception& e) {
    c.pass = false;
    c.detail << "malformed document: " << e.what();
  }
  out.pass = c.pass;
  out.detail = c.detail.str();
  return out;
}

std::vector<GoldenOutcome> replay_golden(const std::string& dir) {
  std::vector<std::string> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.path().extension() == ".json") files.push_back(entry.path().string());
  }
  std::sort(files.begin(), files.end());
  std::vector<GoldenOutcome> out;
  for (const auto& f : files) out.push_back(replay_golden_file(f));
  return out;
}

}  // namespace hollowgh::cli
