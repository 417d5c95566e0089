// Acceptance suite: one PASS/FAIL line per criterion. Exit status is nonzero
// when any criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "hollowgh/bitab.hpp"
#include "hollowgh/cli.hpp"
#include "hollowgh/ghmod.hpp"
#include "hollowgh/symfun.hpp"
#include "test_support.hpp"

using namespace hollowgh;

namespace {

// Wall-clock limits in seconds.
constexpr double kGoldenLimit = 10.0;
constexpr double kHilbertLimitEach = 120.0;
constexpr double kAnnihilationLimit = 60.0;
constexpr double kCharacterLimit = 300.0;

struct GammaCase {
  const char* gamma;
  long total;  // n! C(p1+k1, p1+1) C(p2+k2, p2+1)
};

// The last total is 5! * 1 * 3.
const GammaCase kGammas[] = {
    {"1,1:1,1:0,0", 6},
    {"1,1:2,1:1,0", 72},
    {"2,1:1,1:0,0", 24},
    {"1,2:1,2:0,1", 360},
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
  bool pass = true;
  std::ostringstream note;
  void fail(const std::string& why) {
    pass = false;
    note << why << "; ";
  }
};

void criterion_golden(Outcome& o) {
  const auto t0 = Clock::now();
  const auto results = cli::replay_golden(cli::default_golden_dir());
  const double secs = seconds_since(t0);
  const std::set<std::string> required{
      "e2-y-operator-identity", "straightening-example-expansion", "row-column-content-sequences",
      "macmahon-times-bipermanent", "domino-tabloid-count", "maximal-domino-type",
      "e-phi-d-values", "four-cell-bipermanent-on-delta"};
  std::set<std::string> seen;
  for (const auto& r : results) {
    seen.insert(r.ref);
    if (!r.pass) o.fail(r.file + ": " + r.detail);
  }
  for (const auto& ref : required) {
    if (!seen.count(ref)) o.fail("missing " + ref);
  }
  if (secs >= kGoldenLimit) o.fail("took " + std::to_string(secs) + " s");
  o.note << results.size() << " documents in " << secs << " s";
}

void criterion_hilbert(Outcome& o) {
  for (const auto& c : kGammas) {
    const auto t0 = Clock::now();
    const auto g = HollowGamma::parse(c.gamma);
    const auto closed = hilbert_closed(g);
    const auto brute = harmonic_series(g);
    const double secs = seconds_since(t0);
    if (!(closed == brute)) o.fail(std::string(c.gamma) + " harmonic differs from closed form");
    const Integer product = factorial(g.n()) * binomial(g.p1 + g.k1, g.p1 + 1) * binomial(g.p2 + g.k2, g.p2 + 1);
    if (brute.total() != product) o.fail(std::string(c.gamma) + " total " + brute.total().get_str());
    if (brute.total() != c.total) o.fail(std::string(c.gamma) + " pinned total " + std::to_string(c.total));
    if (secs >= kHilbertLimitEach) o.fail(std::string(c.gamma) + " took " + std::to_string(secs) + " s");
    o.note << c.gamma << " total " << brute.total().get_str() << " (" << secs << " s) ";
  }
}

void criterion_basis(Outcome& o) {
  for (const auto& c : kGammas) {
    const auto r = verify_independence(HollowGamma::parse(c.gamma));
    if (!r.pass) o.fail(std::string(c.gamma) + " rank " + std::to_string(r.rank) + "/" + std::to_string(r.expected));
    o.note << c.gamma << " rank " << r.rank << " ";
  }
}

void criterion_annihilation(Outcome& o) {
  const auto t0 = Clock::now();
  long identities = 0;
  for (const auto& c : kGammas) {
    const auto g = HollowGamma::parse(c.gamma);
    const auto d = delta(hollow_cells(g));
    for (const auto& gen : ideal_generators(g, IdealLevel::J)) {
      if (!apply_diff(gen.poly, d).is_zero()) o.fail(std::string(c.gamma) + " " + gen.name);
    }
    const auto r = annihilation_check(g);
    if (!r.pass) {
      for (const auto& line : r.details) {
        if (line.rfind("FAIL", 0) == 0) o.fail(std::string(c.gamma) + " " + line);
      }
    }
    identities += r.rank;
  }
  const double secs = seconds_since(t0);
  if (secs >= kAnnihilationLimit) o.fail("took " + std::to_string(secs) + " s");
  o.note << identities << " identities in " << secs << " s";
}

void criterion_straightening(Outcome& o) {
  const auto letters = testsupport::signed_letters(-1, 2);
  long inputs = 0;
  long bad_value = 0, bad_order = 0;
  long nonintegral[2] = {0, 0};
  std::string first_nonintegral[2];
  for (int n = 1; n <= 4; ++n) {
    std::vector<int> labels(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) labels[i] = i + 1;
    for (const auto& shape : partitions_of(n)) {
      std::vector<Tableau> lefts;
      std::vector<int> perm = labels;
      do {
        std::vector<std::vector<int>> rows;
        std::size_t k = 0;
        for (int part : shape.parts()) {
          rows.emplace_back(perm.begin() + static_cast<long>(k), perm.begin() + static_cast<long>(k + part));
          k += static_cast<std::size_t>(part);
        }
        lefts.emplace_back(std::move(rows));
      } while (std::next_permutation(perm.begin(), perm.end()));
      testsupport::for_each_filling<ACell>(shape, letters, [&](const AFilling& u) {
        for (const auto& s : lefts) {
          for (BitabKind kind : {BitabKind::det, BitabKind::per}) {
            ++inputs;
            const auto r = straighten(kind, s, u);
            SparsePoly back(n);
            for (const auto& t : r.terms) back += build_bitableau(kind, t.t, t.v) * t.coefficient;
            if (!(back == build_bitableau(kind, s, u))) ++bad_value;
            if (!r.triangular) ++bad_order;
            const int idx = kind == BitabKind::det ? 0 : 1;
            if (!r.integral && nonintegral[idx]++ == 0) first_nonintegral[idx] = to_string(s) + " | " + to_string(u);
          }
        }
      });
    }
  }
  if (bad_value) o.fail(std::to_string(bad_value) + " expansions do not re-evaluate");
  if (bad_order) o.fail(std::to_string(bad_order) + " expansions are not triangular");
  const char* names[2] = {"det", "per"};
  for (int i = 0; i < 2; ++i) {
    if (nonintegral[i]) {
      o.fail(std::string(names[i]) + ": " + std::to_string(nonintegral[i]) + " expansions with non-integral coefficients, first " +
             first_nonintegral[i]);
    }
  }
  o.note << inputs << " inputs";
}

void criterion_symfun(Outcome& o) {
  for (int n = 1; n <= 6; ++n) {
    for (int vars : {n, 4}) {
      SparsePoly sum(vars);
      for (int r = 0; r <= n; ++r) {
        const SparsePoly term = elementary(vars, r) * complete(vars, n - r);
        sum += r % 2 ? -term : term;
      }
      if (!sum.is_zero()) o.fail("e/h alternating sum nonzero at degree " + std::to_string(n));
    }
  }
  long expansions = 0;
  for (int size = 1; size <= 6; ++size) {
    for (const auto& lam : partitions_of(size)) {
      for (int vars = 1; vars <= 4; ++vars) {
        SparsePoly via_e(vars);
        for (const auto& [mu, c] : h_to_e_expand(lam)) {
          SparsePoly prod = SparsePoly::constant(vars, 1);
          for (int part : mu.parts()) prod = prod * elementary(vars, part);
          via_e += prod * Rational(c);
        }
        if (!(via_e == complete_product(vars, lam.parts()))) o.fail("h_to_e " + lam.to_string());
        ++expansions;
      }
    }
  }
  for (int n = 0; n <= 10; ++n) {
    for (int k = 0; k <= n; ++k) {
      if (gaussian_binomial(n, k).total() != binomial(n, k)) o.fail("gauss(" + std::to_string(n) + "," + std::to_string(k) + ")");
    }
  }
  o.note << expansions << " h-to-e expansions";
}

void criterion_characters(Outcome& o) {
  const auto t0 = Clock::now();
  long cases = 0;
  for (int m1 = 0; m1 <= 3; ++m1) {
    for (int m2 = 0; m2 <= 3; ++m2) {
      for (int p1 = 0; p1 <= 1; ++p1) {
        for (int p2 = 0; p2 <= 1; ++p2) {
          if (m1 + p1 + m2 + p2 + 1 > 4) continue;
          for (int k1 = 1; k1 <= 2; ++k1) {
            for (int k2 = 1; k2 <= 2; ++k2) {
              HollowGamma g{m1, m2, k1, k2, p1, p2};
              try {
                g.validate();
              } catch (const std::exception&) {
                continue;
              }
              ++cases;
              const auto formula = graded_character(g, CharacterMode::formula);
              const auto brute = graded_character(g, CharacterMode::bruteforce);
              if (formula != brute) o.fail(g.to_string() + " formula differs from trace decomposition");
              SeriesTable weighted;
              for (const auto& [lam, series] : brute) {
                for (const auto& [key, c] : series.entries()) {
                  weighted.add(key.first, key.second, c * Integer(static_cast<long>(hook_length_count(lam))));
                }
              }
              if (!(weighted == harmonic_series(g))) o.fail(g.to_string() + " dimension sum differs from Hilbert table");
            }
          }
        }
      }
    }
  }
  const double secs = seconds_since(t0);
  if (secs >= kCharacterLimit) o.fail("took " + std::to_string(secs) + " s");
  o.note << cases << " gammas in " << secs << " s";
}

void criterion_bijection(Outcome& o) {
  for (const char* text : {"1,1:1,1:0,0", "2,1:1,1:0,0"}) {
    const auto g = HollowGamma::parse(text);
    const int n = g.n();
    const int pivot = g.pivot();
    const int lo = -(g.m2 + g.p2 + g.k2);
    const int hi = g.m1 + g.p1 + g.k1;
    const auto letters = testsupport::signed_letters(lo, hi);
    const ACell zero{0, 0};
    std::set<std::pair<std::string, std::string>> images;
    std::set<std::string> domain, range_in_window;
    long forward = 0, backward = 0;
    for (const auto& shape : partitions_of(n)) {
      testsupport::for_each_filling<ACell>(shape, letters, [&](const AFilling& u) {
        if (!is_column_strict(u)) return;
        const auto t = standardize(u);
        if (read_by(t, u)[pivot - 1] != zero) return;
        ++forward;
        domain.insert(to_string(u));
        const auto d = decompose_columnstrict(pivot, u);
        if (!(d.cochg == cocharge_diagram(pivot, t))) o.fail(std::string(text) + " cochg " + to_string(u));
        if (d.alpha[pivot - 1] != zero || !std::is_sorted(d.alpha.begin(), d.alpha.end())) {
          o.fail(std::string(text) + " alpha shape " + to_string(u));
        }
        if (!(compose_columnstrict(pivot, t, d.alpha) == u)) o.fail(std::string(text) + " left inverse " + to_string(u));
        std::string key;
        for (const auto& a : d.alpha) key += to_string(a) + ",";
        if (!images.insert({to_string(t), key}).second) o.fail(std::string(text) + " collision " + to_string(u));
      });
    }
    // alpha below the pivot lies in the Y half, above it in the X half.
    const auto y_half = testsupport::signed_letters(lo, 0);
    const auto x_half = testsupport::signed_letters(0, hi);
    for (const auto& t : enumerate_syt(n)) {
      testsupport::for_each_weak_sequence(pivot - 1, y_half, [&](const std::vector<ACell>& below) {
        testsupport::for_each_weak_sequence(n - pivot, x_half, [&](const std::vector<ACell>& above) {
          std::vector<ACell> alpha(below);
          alpha.push_back(zero);
          alpha.insert(alpha.end(), above.begin(), above.end());
          ++backward;
          const auto u = compose_columnstrict(pivot, t, alpha);
          if (!is_column_strict(u) || !(standardize(u) == t)) {
            o.fail(std::string(text) + " compose " + to_string(t));
            return;
          }
          if (decompose_columnstrict(pivot, u).alpha != alpha) o.fail(std::string(text) + " right inverse " + to_string(t));
          const auto entries = rowseq(u);
          const bool inside = std::all_of(entries.begin(), entries.end(), [&](const ACell& c) {
            return ACell::from_signed(lo) <= c && c <= ACell::from_signed(hi);
          });
          if (inside) range_in_window.insert(to_string(u));
        });
      });
    }
    // Restricted to the entry window, compose hits exactly the decomposed fillings.
    if (domain != range_in_window) o.fail(std::string(text) + " window images differ");
    o.note << text << ": " << forward << " fillings, " << backward << " pairs ";
  }
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<void(Outcome&)>>> criteria{
      {"golden corpus", criterion_golden},
      {"Hilbert identity", criterion_hilbert},
      {"basis theorem", criterion_basis},
      {"annihilation suite", criterion_annihilation},
      {"straightening properties", criterion_straightening},
      {"symmetric-function identities", criterion_symfun},
      {"character cross-check", criterion_characters},
      {"column-strict bijection", criterion_bijection},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      criteria[i].second(o);
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    if (!o.pass) ++failures;
    std::cout << (o.pass ? "PASS" : "FAIL") << " [" << i + 1 << "] " << criteria[i].first << ": " << o.note.str()
              << std::endl;
  }
  std::cout << (failures ? std::to_string(failures) + " criteria failed" : "all criteria passed") << std::endl;
  return failures ? 1 : 0;
}
