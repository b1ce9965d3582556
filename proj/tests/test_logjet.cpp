#include <gtest/gtest.h>

#include "generators.hpp"
#include "logres/errors.hpp"
#include "logres/log_jet.hpp"

using namespace logres;

namespace {

std::set<std::string> gens(const MonomialIdeal& I) {
  const auto v = I.to_strings();
  return {v.begin(), v.end()};
}

// Closed form <z_i xi_i (i <= m), xi_j (j > m)> written out by hand, then
// xi_t set to 1, with I ∩ [k] playing the role of [m].
MonomialIdeal closed_form_oracle(const std::set<unsigned>& I, unsigned n, unsigned k, unsigned t,
                                 const VariableList& vars) {
  std::vector<Exponent> g;
  for (unsigned i = 1; i <= n; ++i) {
    Exponent e(vars.size(), 0);
    if (I.count(i) && i <= k) e[i - 1] = 1;
    if (i != t) {
      const auto pos = std::find(vars.begin(), vars.end(), "xi" + std::to_string(i)) - vars.begin();
      e[pos] = 1;
    }
    g.push_back(e);
  }
  return MonomialIdeal(vars, g);
}

// D~_J is visible in chart t iff xi_t is not among its vanishing coordinates.
bool visible_oracle(const std::set<unsigned>& J, unsigned k, unsigned t) {
  for (unsigned i : J) {
    if (i > k) return false;
  }
  return J.count(t) > 0;
}

}  // namespace

TEST(JetChart, Shape) {
  const JetChart jc(3, 2, 1, 2);
  EXPECT_EQ(jc.variables(), (VariableList{"z1", "z2", "z3", "xi1", "xi3"}));
  EXPECT_EQ(jc.variables().size(), 2u * 3 - 1);
  EXPECT_EQ(jc.log_marked(), (std::set<std::string>{"z1"}));
  EXPECT_THROW(JetChart(2, 3, 1, 1), OutOfRange);
  EXPECT_THROW(JetChart(2, 2, 3, 1), OutOfRange);
  EXPECT_THROW(JetChart(2, 2, 1, 3), OutOfRange);
}

TEST(DTilde, Examples) {
  const auto s = build_dtilde_system(2, 2, 2, 1);
  ASSERT_EQ(s.members.size(), 2u);
  EXPECT_EQ(s.members[0].index, 1u);
  EXPECT_EQ(s.members[0].variety.to_string(s.chart.variables), "V(z1,xi2)");
  EXPECT_EQ(s.members[1].index, 2u);
  EXPECT_EQ(s.members[1].variety.to_string(s.chart.variables), "V(z1,z2)");
  EXPECT_TRUE(build_dtilde_system(2, 2, 0, 1).members.empty());
  EXPECT_TRUE(build_dtilde_system(2, 2, 0, 2).members.empty());
  const auto s3 = build_dtilde_system(3, 3, 3, 1);
  EXPECT_EQ(s3.members.size(), 4u);
  EXPECT_EQ(subset_label({2, 3}, 3), "3");
  EXPECT_EQ(subset_label({1}, 3), "1");
}

TEST(DTilde, SystemsAreCompatibleWithVisibleMembersOfDimensionNMinusOne) {
  for (unsigned n = 1; n <= 4; ++n) {
    for (unsigned c = 1; c <= n; ++c) {
      for (unsigned k = 0; k <= c; ++k) {
        for (unsigned t = 1; t <= n; ++t) {
          const auto s = build_dtilde_system(n, c, k, t);
          EXPECT_TRUE(validate_compatible_system(s).valid) << n << c << k << t;
          std::size_t visible = 0;
          for (const auto& J : nonempty_subsets(k)) visible += visible_oracle(J, k, t);
          EXPECT_EQ(s.members.size(), visible);
          for (const auto& m : s.members) {
            EXPECT_EQ(s.chart.variables.size() - m.variety.codimension(), n - 1);
          }
        }
      }
    }
  }
}

TEST(Jcal, Examples) {
  const JetChart a(2, 2, 2, 1);
  const auto full = jcal_generators({1, 2}, a);
  EXPECT_EQ(gens(full.generators), (std::set<std::string>{"z1", "z2*xi2"}));
  EXPECT_TRUE(full.equal);
  EXPECT_TRUE(full.nonempty_j_only);
  EXPECT_TRUE(jcal_generators({1}, JetChart(2, 1, 1, 2)).generators.is_unit());
  EXPECT_TRUE(jcal_generators({1, 2}, JetChart(2, 2, 0, 1)).generators.is_unit());
}

TEST(Jcal, ClosedFormEverywhere) {
  for (unsigned n = 1; n <= 4; ++n) {
    for (unsigned k = 0; k <= n; ++k) {
      for (unsigned t = 1; t <= n; ++t) {
        const JetChart jc(n, n, k, t);
        for (const auto& I : nonempty_subsets(n)) {
          const auto cert = jcal_generators(I, jc);
          EXPECT_TRUE(cert.equal);
          EXPECT_EQ(cert.generators, closed_form_oracle(I, n, k, t, jc.variables()))
              << subset_string(I) << " " << jc.id();
        }
      }
    }
  }
}

TEST(DTilde, IntersectionRelations) {
  for (unsigned n = 1; n <= 4; ++n) {
    for (unsigned k = 0; k <= n; ++k) {
      for (unsigned t = 1; t <= n; ++t) {
        const JetChart jc(n, n, k, t);
        for (const auto& I : nonempty_subsets(n)) {
          for (const auto& J : nonempty_subsets(n)) {
            const MonomialIdeal meet = dtilde_ideal(I, jc).sum(dtilde_ideal(J, jc));
            if (meet.is_unit()) continue;
            std::set<unsigned> IJ;
            std::set_intersection(I.begin(), I.end(), J.begin(), J.end(), std::inserter(IJ, IJ.begin()));
            ASSERT_FALSE(IJ.empty()) << "disjoint index sets meet in " << jc.id();
            const MonomialIdeal target = dtilde_ideal(IJ, jc);
            for (const auto& g : target.generators()) EXPECT_TRUE(meet.contains(g));
          }
        }
      }
    }
  }
}

TEST(Gamma, PullbackExamples) {
  const JetChart jc(2, 1, 1, 1);
  const VariableList z{"z1", "z2"};
  const Polynomial s1 = Polynomial::parse("z2 + 3", z);
  const Polynomial s2 = Polynomial::parse("z1*z2 - 1", z);
  const auto g = gamma_pullback_check({s1, s2}, {1}, jc);
  const VariableList v = jc.variables();
  EXPECT_EQ(g.pullback, Polynomial::parse("(z2 + 3)*z1 + (z1*z2 - 1)*xi2", v));
  EXPECT_TRUE(g.member_of_jcal);
  const auto zero = gamma_pullback_check({Polynomial(z), Polynomial(z)}, {1}, jc);
  EXPECT_TRUE(zero.pullback.is_zero());
  EXPECT_TRUE(zero.member_of_jcal);
}

TEST(Gamma, PullbacksLieInJcalAndGenerateIt) {
  gen::Rng rng(61);
  for (unsigned n = 1; n <= 3; ++n) {
    for (unsigned k = 0; k <= n; ++k) {
      for (unsigned t = 1; t <= n; ++t) {
        const JetChart jc(n, n, k, t);
        VariableList z;
        for (unsigned i = 1; i <= n; ++i) z.push_back("z" + std::to_string(i));
        for (const auto& I : nonempty_subsets(n)) {
          EXPECT_EQ(gamma_generated_ideal(I, jc), jcal_generators(I, jc).generators);
          for (int trial = 0; trial < 3; ++trial) {
            std::vector<Polynomial> sections;
            for (unsigned i = 0; i < n; ++i) sections.push_back(gen::polynomial(rng, z, 2, 3));
            EXPECT_TRUE(gamma_pullback_check(sections, I, jc).member_of_jcal);
          }
        }
      }
    }
  }
}

TEST(Principalization, Examples) {
  for (unsigned t = 1; t <= 2; ++t) {
    const JetChart jc(2, 2, 2, t);
    const auto s = build_dtilde_system(2, 2, 2, t);
    const auto minimal = resolve_system(s, ResolutionMode::minimal);
    EXPECT_NO_THROW(verify_principalization(minimal, {1}, jc));
    EXPECT_NO_THROW(verify_principalization(minimal, {2}, jc));
    const auto canonical = resolve_system(s, ResolutionMode::canonical);
    const auto F = verify_principalization(canonical, {1, 2}, jc);
    EXPECT_EQ(F.size(), canonical.atlas.leaves().size());
    ResolutionResult bare;
    bare.atlas = Atlas(jc.chart());
    EXPECT_THROW(verify_principalization(bare, {1, 2}, jc), NotResolved);
  }
}

TEST(Principalization, MinimalAndCanonicalForNEqualsC) {
  for (unsigned n = 2; n <= 3; ++n) {
    for (unsigned k = 0; k <= n; ++k) {
      for (unsigned t = 1; t <= n; ++t) {
        const JetChart jc(n, n, k, t);
        const auto s = build_dtilde_system(n, n, k, t);
        const auto minimal = resolve_system(s, ResolutionMode::minimal);
        std::set<unsigned> all;
        for (unsigned i = 1; i <= n; ++i) all.insert(i);
        for (unsigned i = 1; i <= n; ++i) {
          auto I = all;
          I.erase(i);
          EXPECT_NO_THROW(verify_principalization(minimal, I, jc)) << jc.id() << " drop " << i;
        }
        EXPECT_NO_THROW(verify_principalization(resolve_system(s, ResolutionMode::canonical), all, jc)) << jc.id();
      }
    }
  }
}
