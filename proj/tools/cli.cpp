#include "hollowgh/cli.hpp"

#include <ostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "hollowgh/bitab.hpp"
#include "hollowgh/errors.hpp"
#include "hollowgh/ghmod.hpp"
#include "json.hpp"

namespace hollowgh::cli {

namespace {

using nlohmann::json;

struct RunConfig {
  std::string gamma = "1,1:1,1:0,0";
  std::string trunc;
  int cap_n = 6;
  std::size_t cap_basis = 2000;
  std::string format = "text";
  unsigned seed = 1;
  // subcommand-specific
  std::string kind;
  std::string mode = "both";
  std::string left;
  std::string right;
  std::string dir;
  int sweep = 0;
};

json series_json(const SeriesTable& s) { return json::parse(s.to_json()); }

std::pair<int, int> parse_trunc(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw ParseError(0, "--trunc expects R,S");
  std::size_t used = 0;
  int r = 0, s = 0;
  try {
    r = std::stoi(text.substr(0, comma), &used);
    if (used != comma) throw ParseError(used, "--trunc: bad integer");
    const std::string rest = text.substr(comma + 1);
    s = std::stoi(rest, &used);
    if (used != rest.size()) throw ParseError(comma + 1 + used, "--trunc: trailing characters");
  } catch (const std::invalid_argument&) {
    throw ParseError(0, "--trunc expects R,S");
  } catch (const std::out_of_range&) {
    throw ParseError(0, "--trunc value out of range");
  }
  if (r < 0 || s < 0) throw ParseError(0, "--trunc values must be nonnegative");
  return {r, s};
}

SeriesTable difference(const SeriesTable& a, const SeriesTable& b) {
  SeriesTable out = a;
  for (const auto& [k, c] : b.entries()) out.add(k.first, k.second, -c);
  return out;
}

int emit(std::ostream& out, const RunConfig& cfg, const json& j, const std::string& text, bool pass) {
  if (cfg.format == "json") {
    out << j.dump() << "\n";
  } else {
    out << text;
  }
  return pass ? kOk : kVerificationFailed;
}

int cmd_delta(const RunConfig& cfg, std::ostream& out) {
  const auto g = HollowGamma::parse(cfg.gamma);
  g.validate();
  const auto cells = hollow_cells(g);
  const auto d = delta(cells, cfg.cap_n);
  const auto [r, s] = diagram_bidegree(cells);
  json j;
  j["gamma"] = g.to_string();
  j["cells"] = to_string(cells);
  j["bidegree"] = {r, s};
  j["terms"] = d.size();
  j["delta"] = d.to_string();
  std::ostringstream t;
  t << "gamma " << g.to_string() << "  n=" << g.n() << "  cells " << to_string(cells) << "\n"
    << "bidegree (" << r << "," << s << ")  terms " << d.size() << "\n"
    << "Delta = " << d.to_string() << "\n";
  return emit(out, cfg, j, t.str(), true);
}

int cmd_hilbert(const RunConfig& cfg, std::ostream& out) {
  const auto g = HollowGamma::parse(cfg.gamma);
  const Caps caps{cfg.cap_n, cfg.cap_basis};
  const auto closed = hilbert_closed(g);
  const auto harmonic = harmonic_series(g, caps);
  const auto diff = difference(closed, harmonic);
  bool pass = diff.is_zero();
  const bool total_ok = closed.total() == expected_total(g);
  pass = pass && total_ok;
  json j;
  j["gamma"] = g.to_string();
  j["closed"] = series_json(closed);
  j["harmonic"] = series_json(harmonic);
  j["diff"] = series_json(diff);
  j["total"] = closed.total().get_str();
  j["expected_total"] = expected_total(g).get_str();
  std::ostringstream t;
  t << "gamma " << g.to_string() << "\n"
    << "closed   : " << closed.to_string() << "\n"
    << "harmonic : " << harmonic.to_string() << "\n"
    << "diff     : " << (diff.is_zero() ? "0" : diff.to_string()) << "\n"
    << "total " << closed.total().get_str() << " (expected " << expected_total(g).get_str() << ")\n";
  if (!cfg.trunc.empty()) {
    const auto [R, S] = parse_trunc(cfg.trunc);
    json levels;
    const std::pair<IdealLevel, SeriesTable> rows[] = {
        {IdealLevel::G, hilbert_G(g, R, S)},
        {IdealLevel::H, hilbert_H(g, R, S)},
        {IdealLevel::J, closed.truncated(R, S)},
    };
    for (const auto& [level, formula] : rows) {
      const auto brute = quotient_series(g, level, R, S);
      const bool ok = brute == formula;
      pass = pass && ok;
      levels[to_string(level)] = {{"formula", series_json(formula)}, {"quotient", series_json(brute)}, {"match", ok}};
      t << to_string(level) << "-quotient up to (" << R << "," << S << "): " << (ok ? "match" : "MISMATCH") << "\n"
        << "  formula  : " << formula.to_string() << "\n"
        << "  quotient : " << brute.to_string() << "\n";
    }
    j["levels"] = levels;
  }
  j["match"] = pass;
  t << "match=" << (pass ? "true" : "false") << "\n";
  return emit(out, cfg, j, t.str(), pass);
}

int cmd_basis(const RunConfig& cfg, std::ostream& out) {
  const auto g = HollowGamma::parse(cfg.gamma);
  const Caps caps{cfg.cap_n, cfg.cap_basis};
  std::vector<BasisElement> elems;
  const std::string kind = cfg.kind.empty() ? "B" : cfg.kind;
  if (kind == "B") {
    elems = basis_B(g, caps);
  } else if (kind == "BB") {
    elems = basis_BB(g, caps);
  } else if (kind == "EEB") {
    if (cfg.trunc.empty()) throw ParseError(0, "EEB needs --trunc R,S");
    const auto [R, S] = parse_trunc(cfg.trunc);
    elems = basis_EEB(g, R, S, caps);
  } else {
    throw ParseError(0, "--kind must be B, BB or EEB");
  }
  json arr = json::array();
  std::ostringstream t;
  for (const auto& b : elems) {
    arr.push_back({{"element", to_string(b)}, {"x", b.xdeg}, {"y", b.ydeg}});
    t << to_string(b) << "  |X|=" << b.xdeg << " |Y|=" << b.ydeg << "\n";
  }
  t << elems.size() << " elements\n";
  json j;
  j["gamma"] = g.to_string();
  j["kind"] = kind;
  j["count"] = elems.size();
  j["elements"] = arr;
  return emit(out, cfg, j, t.str(), true);
}

json report_json(const Report& r) { return json::parse(r.to_json()); }

// Random straightening round trips at n <= 4.
Report straighten_sweep(int count, unsigned seed) {
  Report rep;
  rep.level = "straighten";
  std::mt19937 rng(seed);
  const std::vector<int> letters{-1, 0, 1, 2};
  for (int i = 0; i < count; ++i) {
    const int n = 1 + static_cast<int>(rng() % 4);
    const auto shapes = partitions_of(n);
    const auto& shape = shapes[rng() % shapes.size()];
    std::vector<int> labels(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) labels[k] = k + 1;
    std::shuffle(labels.begin(), labels.end(), rng);
    std::vector<std::vector<int>> srows;
    std::vector<std::vector<ACell>> urows;
    std::size_t k = 0;
    for (int part : shape.parts()) {
      srows.emplace_back();
      urows.emplace_back();
      for (int c = 0; c < part; ++c) {
        srows.back().push_back(labels[k++]);
        urows.back().push_back(ACell::from_signed(letters[rng() % letters.size()]));
      }
    }
    const Tableau s(srows);
    const AFilling u(urows);
    for (BitabKind kind : {BitabKind::det, BitabKind::per}) {
      ++rep.expected;
      const auto r = straighten(kind, s, u);
      SparsePoly back(n);
      for (const auto& term : r.terms) back += build_bitableau(kind, term.t, term.v) * term.coefficient;
      if (back == build_bitableau(kind, s, u) && r.triangular && (kind == BitabKind::per || r.integral)) {
        ++rep.rank;
      } else {
        rep.details.push_back(std::string(kind == BitabKind::det ? "det " : "per ") + to_string(s) + " | " +
                              to_string(u));
      }
    }
  }
  rep.pass = rep.rank == rep.expected;
  return rep;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  const auto g = HollowGamma::parse(cfg.gamma);
  const Caps caps{cfg.cap_n, cfg.cap_basis};
  const Report ind = verify_independence(g, caps);
  const Report ann = annihilation_check(g, caps);
  bool pass = ind.pass && ann.pass;
  json j;
  j["independence"] = report_json(ind);
  j["annihilation"] = report_json(ann);
  std::ostringstream t;
  t << "gamma " << g.to_string() << "\n"
    << "independence: rank " << ind.rank << "/" << ind.expected << " " << (ind.pass ? "PASS" : "FAIL") << "\n"
    << "  BB series " << ind.series.to_string() << "\n";
  for (const auto& d : ind.details) t << "  " << d << "\n";
  t << "annihilation: " << ann.rank << "/" << ann.expected << " identities " << (ann.pass ? "PASS" : "FAIL") << "\n";
  for (const auto& d : ann.details) t << "  " << d << "\n";
  if (cfg.sweep > 0) {
    const Report sw = straighten_sweep(cfg.sweep, cfg.seed);
    pass = pass && sw.pass;
    j["straighten_sweep"] = report_json(sw);
    t << "straightening sweep (seed " << cfg.seed << "): " << sw.rank << "/" << sw.expected << " "
      << (sw.pass ? "PASS" : "FAIL") << "\n";
    for (const auto& d : sw.details) t << "  " << d << "\n";
  }
  j["pass"] = pass;
  return emit(out, cfg, j, t.str(), pass);
}

int cmd_character(const RunConfig& cfg, std::ostream& out) {
  const auto g = HollowGamma::parse(cfg.gamma);
  const Caps caps{cfg.cap_n, cfg.cap_basis};
  if (cfg.mode != "both" && cfg.mode != "formula" && cfg.mode != "bruteforce") {
    throw ParseError(0, "--mode must be formula, bruteforce or both");
  }
  CharacterSeries formula, brute;
  if (cfg.mode != "bruteforce") formula = graded_character(g, CharacterMode::formula, caps);
  if (cfg.mode != "formula") brute = graded_character(g, CharacterMode::bruteforce, caps);
  bool pass = true;
  json j;
  j["gamma"] = g.to_string();
  j["mode"] = cfg.mode;
  json shapes = json::object();
  std::ostringstream t;
  t << "gamma " << g.to_string() << "\n";
  SeriesTable weighted;
  for (const auto& lam : partitions_of(g.n())) {
    json entry;
    t << lam.to_string() << ":";
    const SeriesTable& main = cfg.mode == "bruteforce" ? brute[lam] : formula[lam];
    if (cfg.mode != "bruteforce") {
      entry["formula"] = series_json(formula[lam]);
      t << " formula " << (formula[lam].is_zero() ? "0" : formula[lam].to_string());
    }
    if (cfg.mode != "formula") {
      entry["bruteforce"] = series_json(brute[lam]);
      t << " bruteforce " << (brute[lam].is_zero() ? "0" : brute[lam].to_string());
    }
    if (cfg.mode == "both") {
      const bool ok = formula[lam] == brute[lam];
      entry["match"] = ok;
      pass = pass && ok;
      t << (ok ? "  match" : "  MISMATCH");
    }
    t << "\n";
    SeriesTable scaled;
    for (const auto& [k, c] : main.entries()) scaled.add(k.first, k.second, c * Integer(static_cast<long>(hook_length_count(lam))));
    weighted += scaled;
    shapes[lam.to_string()] = entry;
  }
  const bool hilbert_ok = weighted == hilbert_closed(g);
  pass = pass && hilbert_ok;
  j["shapes"] = shapes;
  j["dimension_series"] = series_json(weighted);
  j["hilbert_match"] = hilbert_ok;
  j["match"] = pass;
  t << "sum of dim * multiplicity: " << weighted.to_string() << (hilbert_ok ? "  (equals Hilbert series)" : "  MISMATCH")
    << "\nmatch=" << (pass ? "true" : "false") << "\n";
  return emit(out, cfg, j, t.str(), pass);
}

int cmd_straighten(const RunConfig& cfg, std::ostream& out) {
  if (cfg.left.empty() || cfg.right.empty()) throw ParseError(0, "straighten needs --left and --right");
  const std::string kind_s = cfg.kind.empty() ? "det" : cfg.kind;
  if (kind_s != "det" && kind_s != "per") throw ParseError(0, "--kind must be det or per");
  const BitabKind kind = kind_s == "det" ? BitabKind::det : BitabKind::per;
  const auto s = parse_tableau(cfg.left);
  const auto u = parse_afilling(cfg.right);
  const auto r = straighten(kind, s, u);
  json terms = json::array();
  std::ostringstream t;
  t << "[" << to_string(s) << " | " << to_string(u) << "]_" << kind_s << " =\n";
  for (const auto& term : r.terms) {
    terms.push_back({{"left", to_string(term.t)}, {"right", to_string(term.v)}, {"coefficient", term.coefficient.get_str()}});
    t << "  " << (term.coefficient > 0 ? "+" : "") << term.coefficient.get_str() << " [" << to_string(term.t) << " | "
      << to_string(term.v) << "]\n";
  }
  if (r.terms.empty()) t << "  0\n";
  t << "standard input: " << (r.input_standard ? "yes" : "no") << ", triangular: " << (r.triangular ? "yes" : "no")
    << ", integral: " << (r.integral ? "yes" : "no")
    << "\n";
  json j;
  j["kind"] = kind_s;
  j["terms"] = terms;
  j["input_standard"] = r.input_standard;
  j["triangular"] = r.triangular;
  j["integral"] = r.integral;
  return emit(out, cfg, j, t.str(), r.triangular);
}

int cmd_examples(const RunConfig& cfg, std::ostream& out) {
  const auto results = replay_golden(cfg.dir.empty() ? default_golden_dir() : cfg.dir);
  bool pass = !results.empty();
  json arr = json::array();
  std::ostringstream t;
  for (const auto& r : results) {
    pass = pass && r.pass;
    arr.push_back({{"file", r.file}, {"ref", r.ref}, {"pass", r.pass}, {"detail", r.detail}});
    t << (r.pass ? "PASS " : "FAIL ") << r.file << "  " << r.ref;
    if (!r.detail.empty()) t << "  " << r.detail;
    t << "\n";
  }
  t << results.size() << " examples, " << (pass ? "all pass" : "failures present") << "\n";
  json j;
  j["examples"] = arr;
  j["pass"] = pass;
  return emit(out, cfg, j, t.str(), pass);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Hollow Garsia-Haiman module toolkit"};
  app.require_subcommand(1);
  app.add_option("--gamma", cfg.gamma, "gamma as m1,m2:k1,k2:p1,p2");
  app.add_option("--trunc", cfg.trunc, "truncation bidegree R,S");
  app.add_option("--cap-n", cfg.cap_n, "largest n")->check(CLI::Range(1, 8));
  app.add_option("--cap-basis", cfg.cap_basis, "largest basis size");
  app.add_option("--format", cfg.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--seed", cfg.seed, "seed for randomized sweeps");

  auto* delta_cmd = app.add_subcommand("delta", "print Delta_gamma");
  auto* hilbert_cmd = app.add_subcommand("hilbert", "closed-form vs brute-force Hilbert series");
  auto* basis_cmd = app.add_subcommand("basis", "list B, BB or EEB with statistics");
  basis_cmd->add_option("--kind", cfg.kind, "B, BB or EEB");
  auto* verify_cmd = app.add_subcommand("verify", "independence and annihilation checks");
  verify_cmd->add_option("--sweep", cfg.sweep, "random straightening checks to add");
  auto* char_cmd = app.add_subcommand("character", "graded character per irreducible");
  char_cmd->add_option("--mode", cfg.mode, "formula, bruteforce or both");
  auto* str_cmd = app.add_subcommand("straighten", "expand a bitableau in the standard basis");
  str_cmd->add_option("--kind", cfg.kind, "det or per");
  str_cmd->add_option("--left", cfg.left, "left tableau, rows bottom to top separated by ' / '");
  str_cmd->add_option("--right", cfg.right, "right filling, same shape");
  auto* ex_cmd = app.add_subcommand("examples", "replay the golden corpus");
  ex_cmd->add_option("--dir", cfg.dir, "golden corpus directory");
  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kParseError;
  }

  try {
    if (delta_cmd->parsed()) return cmd_delta(cfg, out);
    if (hilbert_cmd->parsed()) return cmd_hilbert(cfg, out);
    if (basis_cmd->parsed()) return cmd_basis(cfg, out);
    if (verify_cmd->parsed()) return cmd_verify(cfg, out);
    if (char_cmd->parsed()) return cmd_character(cfg, out);
    if (str_cmd->parsed()) return cmd_straighten(cfg, out);
    if (ex_cmd->parsed()) return cmd_examples(cfg, out);
  } catch (const ParseError& e) {
    err << "parse error " << e.what() << "\n";
    return kParseError;
  } catch (const PreconditionError& e) {
    err << "invalid input: " << e.what() << "\n";
    return kParseError;
  } catch (const DimensionError& e) {
    err << "invalid input: " << e.what() << "\n";
    return kParseError;
  } catch (const ResourceError& e) {
    err << "resource cap: " << e.what() << "\n";
    return kResourceCap;
  } catch (const ConsistencyError& e) {
    err << "internal consistency failure: " << e.what() << "\n";
    return kVerificationFailed;
  }
  return kParseError;
}

}  // namespace hollowgh::cli
