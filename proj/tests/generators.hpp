#pragma once

// Hand-rolled random generators shared by the property tests and the
// acceptance runner. Everything is seeded, so failures reproduce.

#include <algorithm>
#include <cstdint>
#include <map>
#include <tuple>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "logres/errors.hpp"
#include "logres/log_jet.hpp"
#include "logres/monomial_ideal.hpp"
#include "logres/polynomial.hpp"
#include "logres/residues.hpp"
#include "logres/resolution.hpp"

namespace logres::gen {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : g_(seed) {}
  long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(g_); }
  bool coin() { return uniform(0, 1) == 1; }
  Rational rational(long bound = 9) { return Rational(uniform(-bound, bound), uniform(1, bound)); }
  template <class T>
  void shuffle(std::vector<T>& v) { std::shuffle(v.begin(), v.end(), g_); }
  std::mt19937_64& engine() { return g_; }

 private:
  std::mt19937_64 g_;
};

inline VariableList names(const std::string& stem, unsigned m) {
  VariableList v;
  for (unsigned i = 1; i <= m; ++i) v.push_back(stem + std::to_string(i));
  return v;
}

inline Polynomial polynomial(Rng& rng, const VariableList& vars, unsigned max_degree, unsigned max_terms) {
  Polynomial p(vars);
  const long terms = rng.uniform(0, max_terms);
  for (long t = 0; t < terms; ++t) {
    Exponent e(vars.size(), 0);
    long budget = rng.uniform(0, max_degree);
    while (budget-- > 0) ++e[rng.uniform(0, static_cast<long>(vars.size()) - 1)];
    p += Polynomial::monomial(vars, e, rng.rational());
  }
  return p;
}

inline std::set<std::string> subset(Rng& rng, const VariableList& vars, std::size_t size) {
  VariableList v = vars;
  rng.shuffle(v);
  return std::set<std::string>(v.begin(), v.begin() + static_cast<long>(size));
}

/// <x1..xp, x_{p+1}x_{r+1}, ..., x_r x_{2r-p}> after relabelling by `perm`.
inline MonomialIdeal simple_ideal(const VariableList& vars, unsigned p, unsigned r, const std::vector<std::size_t>& perm) {
  std::vector<std::string> gens;
  for (unsigned i = 0; i < p; ++i) gens.push_back(vars[perm[i]]);
  for (unsigned i = p; i < r; ++i) gens.push_back(vars[perm[i]] + "*" + vars[perm[r + i - p]]);
  return MonomialIdeal::from_strings(vars, gens);
}

inline MonomialIdeal random_simple_ideal(Rng& rng, const VariableList& vars, unsigned p, unsigned r) {
  std::vector<std::size_t> perm(vars.size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
  rng.shuffle(perm);
  return simple_ideal(vars, p, r, perm);
}

/// A compatible system in a fresh chart with `m` variables, found by
/// rejection. Every member has codimension >= 2.
inline CompatibleSystem random_system(Rng& rng, unsigned m, unsigned length, unsigned max_members) {
  const VariableList vars = names("x", m);
  for (;;) {
    std::vector<Member> members;
    const long count = rng.uniform(1, max_members);
    for (long i = 0; i < count; ++i) {
      const unsigned index = static_cast<unsigned>(rng.uniform(1, length));
      const auto vs = subset(rng, vars, static_cast<std::size_t>(rng.uniform(2, std::min<long>(m, 3))));
      members.push_back({index, "", SimpleVariety(vs)});
    }
    std::sort(members.begin(), members.end(), [](const Member& a, const Member& b) {
      return std::tie(a.index, a.variety) < std::tie(b.index, b.variety);
    });
    std::set<SimpleVariety> distinct;
    members.erase(std::remove_if(members.begin(), members.end(),
                                 [&](const Member& mem) { return !distinct.insert(mem.variety).second; }),
                  members.end());
    std::map<unsigned, unsigned> seen;
    for (auto& mem : members) mem.label = std::to_string(++seen[mem.index]);
    CompatibleSystem s{Chart::root(vars), members, 1, length};
    if (validate_compatible_system(s).valid) return s;
  }
}

/// Zeroed variables of a slice Z such that the restriction is a usable
/// system: transverse, members still of codimension >= 2 and pairwise
/// distinct. Empty optional when none was found.
inline std::optional<std::set<std::string>> random_slice(Rng& rng, const CompatibleSystem& s, int attempts = 50) {
  for (int a = 0; a < attempts; ++a) {
    const auto zeroed = subset(rng, s.chart.variables, static_cast<std::size_t>(rng.uniform(1, 2)));
    std::set<std::set<std::string>> restricted;
    bool ok = true;
    for (const auto& m : s.members) {
      std::set<std::string> left;
      for (const auto& v : m.variety.vanishing_set()) {
        if (!zeroed.count(v)) left.insert(v);
      }
      if (left.size() < 2 || !restricted.insert(left).second) ok = false;
    }
    if (!ok) continue;
    try {
      restrict_system(s, zeroed);
    } catch (const NonTransverseSlice&) {
      continue;
    }
    return zeroed;
  }
  return std::nullopt;
}

/// Nonzero form of degree d in three variables.
inline Polynomial random_homogeneous(Rng& rng, const VariableList& x, unsigned d) {
  Polynomial p(x);
  while (p.is_zero()) {
    for (unsigned a = 0; a <= d; ++a) {
      for (unsigned b = 0; a + b <= d; ++b) {
        if (!rng.coin()) continue;
        p += Polynomial::monomial(x, {d - a - b, a, b}, Rational(rng.uniform(-4, 4)));
      }
    }
  }
  return p;
}

/// Random arrangement of c curves of degree 1 or 2 on P^2, no two proportional.
inline DivisorArrangement random_arrangement(Rng& rng, std::size_t c) {
  const VariableList x{"x0", "x1", "x2"};
  for (;;) {
    std::vector<DivisorComponent> comps;
    for (std::size_t i = 0; i < c; ++i) {
      const unsigned d = static_cast<unsigned>(rng.uniform(1, 2));
      comps.push_back({random_homogeneous(rng, x, d), d});
    }
    try {
      return DivisorArrangement(2, comps);
    } catch (const InvalidArgument&) {
    }
  }
}

}  // namespace logres::gen
