#include <algorithm>
#include <numeric>
#include <set>

#include "hollowgh/errors.hpp"
#include "hollowgh/ghmod.hpp"

namespace hollowgh {

namespace {

// Beta-set recursion: removing a rim hook of length r moves one bead down by r.
Integer mn_beads(std::set<int>& beads, const std::vector<int>& mu, std::size_t next) {
  if (next == mu.size()) return 1;
  const int r = mu[next];
  Integer total = 0;
  const std::vector<int> snapshot(beads.begin(), beads.end());
  for (int b : snapshot) {
    const int target = b - r;
    if (target < 0 || beads.count(target) > 0) continue;
    const auto between = std::distance(beads.upper_bound(target), beads.lower_bound(b));
    beads.erase(b);
    beads.insert(target);
    const Integer sub = mn_beads(beads, mu, next + 1);
    beads.erase(target);
    beads.insert(b);
    if (between % 2 == 0) {
      total += sub;
    } else {
      total -= sub;
    }
  }
  return total;
}

}  // namespace

Integer sn_character(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size()) throw DimensionError("character: lambda and mu have different sizes");
  std::set<int> beads;
  const int len = lambda.length();
  for (int i = 0; i < len; ++i) beads.insert(lambda[i] + (len - 1 - i));
  return mn_beads(beads, mu.parts(), 0);
}

Integer class_size(const Partition& mu) {
  Integer denom = 1;
  std::map<int, int> mult;
  for (int part : mu.parts()) ++mult[part];
  for (const auto& [part, m] : mult) {
    Integer p;
    mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(part), static_cast<unsigned long>(m));
    denom *= p * factorial(m);
  }
  return factorial(mu.size()) / denom;
}

std::vector<int> cycle_type_representative(const Partition& mu) {
  std::vector<int> perm(static_cast<std::size_t>(mu.size()));
  int start = 0;
  for (int part : mu.parts()) {
    for (int i = 0; i < part; ++i) perm[start + i] = start + (i + 1) % part;
    start += part;
  }
  return perm;
}

namespace {

CharacterSeries formula_character(const HollowGamma& g) {
  const SeriesTable gauss =
      gaussian_binomial(g.p1 + g.k1, g.p1 + 1, Vars::X) * gaussian_binomial(g.p2 + g.k2, g.p2 + 1, Vars::Y);
  CharacterSeries out;
  for (const auto& lam : partitions_of(g.n())) {
    SeriesTable sum;
    for (const auto& u : enumerate_syt(g.n(), lam, kMaxVars)) {
      BasisElement b;
      b.v = cocharge_diagram(g, u);
      const auto [x, y] = stats(b);
      sum.add(x, y, 1);
    }
    out[lam] = gauss * sum;
  }
  return out;
}

// trace of sigma on span(rows); rows must be an echelon basis held by `e`.
Rational trace_on(const Echelon& e, const std::vector<SparsePoly>& rows, const std::vector<int>& sigma) {
  Rational tr = 0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto coords = e.coordinates(rows[i].permuted(sigma));
    if (!coords) throw ConsistencyError("character: harmonic component is not S_n-stable");
    tr += (*coords)[i];
  }
  return tr;
}

CharacterSeries bruteforce_character(const HollowGamma& g, const Caps& caps) {
  const int n = g.n();
  if (n > std::min(5, caps.n)) throw ResourceError("brute-force character needs n <= 5, got n = " + std::to_string(n));
  const HarmonicSpace h = harmonic_space(g, caps);
  const auto shapes = partitions_of(n);
  std::vector<Integer> sizes;
  std::vector<std::vector<int>> reps;
  for (const auto& mu : shapes) {
    sizes.push_back(class_size(mu));
    reps.push_back(cycle_type_representative(mu));
  }
  const Integer nfact = factorial(n);
  CharacterSeries out;
  for (const auto& lam : shapes) out[lam];
  for (const auto& [key, basis] : h.bases) {
    Echelon e(n);
    for (const auto& f : basis) e.insert(f);
    const auto rows = e.basis();
    std::vector<Rational> traces;
    for (const auto& rep : reps) traces.push_back(trace_on(e, rows, rep));
    for (const auto& lam : shapes) {
      Rational m = 0;
      for (std::size_t c = 0; c < shapes.size(); ++c) {
        m += Rational(sizes[c] * sn_character(lam, shapes[c])) * traces[c];
      }
      m /= Rational(nfact);
      m.canonicalize();
      if (m.get_den() != 1 || m < 0) {
        throw ConsistencyError("character: multiplicity " + m.get_str() + " of " + lam.to_string() + " at (" +
                               std::to_string(key.first) + "," + std::to_string(key.second) + ")");
      }
      out[lam].add(key.first, key.second, m.get_num());
    }
  }
  return out;
}

}  // namespace

CharacterSeries graded_character(const HollowGamma& g, CharacterMode mode, const Caps& caps) {
  g.validate();
  if (g.n() > caps.n) throw ResourceError("n = " + std::to_string(g.n()) + " exceeds cap " + std::to_string(caps.n));
  return mode == CharacterMode::formula ? formula_character(g) : bruteforce_character(g, caps);
}

}  // namespace hollowgh
