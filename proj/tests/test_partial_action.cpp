#include "oracles.hpp"

#include "pact/errors.hpp"
#include "pact/partial_action.hpp"
#include "pact/sampling.hpp"

#include <gtest/gtest.h>

using namespace pact;

namespace {

const PrefixMap kShift = PrefixMap::parse("[0->1]");

bool has_violation(const AxiomReport& r, int axiom, int t, int s)
{
  for (const auto& v : r.violations)
    if (v.axiom == axiom && v.t == t && v.s == s)
      return true;
  return false;
}

} // namespace

TEST(Zindex, Convention)
{
  EXPECT_EQ(zindex::left_quotient(2, 5), 3);
  EXPECT_EQ(zindex::right_quotient(2, 5), -3);
  EXPECT_EQ(zindex::inv(4), -4);
}

TEST(Domain, Examples)
{
  const ZPartialAction a(kShift);
  EXPECT_EQ(a.domain(-1), ClopenSet::parse("{0}"));
  EXPECT_EQ(a.domain(1), ClopenSet::parse("{1}"));
  EXPECT_TRUE(a.domain(-2).is_empty());
  EXPECT_TRUE(a.domain(0).is_full());
  EXPECT_EQ(a.map(0), PrefixMap::identity());
}

TEST(Domain, OdometerLevelOneByEnumeration)
{
  const Action a(GeneratedMap::odometer());
  EXPECT_THROW(a.domain(-2), LevelRequired);
  const ClopenSet x = a.domain(-2, 1);
  EXPECT_EQ(x, ClopenSet::parse("{00,10}"));
  // oracle: depth-2 cells whose probe points survive two steps
  const auto rules = oracle::odometer_rules(1);
  std::set<Word> expected;
  for (const auto& w : oracle::all_words(2))
    if (oracle::iterate(rules, 2, Point(w, "0")) && oracle::iterate(rules, 2, Point(w, "1")))
      expected.insert(w);
  EXPECT_EQ(oracle::cells(x.words(), 2), expected);
}

TEST(Domain, ImageIdentity)
{
  Rng rng(31);
  for (int i = 0; i < 50; ++i) {
    const ZPartialAction a(random_prefix_map(rng, 4, 3));
    for (int n = 0; n <= 6; ++n) {
      EXPECT_EQ(a.map(n).image(a.domain(-n)), a.domain(n));
      EXPECT_EQ(a.map(-n), inverse(a.map(n)));
    }
  }
}

TEST(Domain, LevelMonotone)
{
  const Action a(GeneratedMap::odometer());
  for (std::size_t k = 0; k <= 5; ++k)
    for (int t = -4; t <= 4; ++t)
      EXPECT_TRUE(is_subset(a.domain(t, k), a.domain(t, k + 1))) << "k=" << k << " t=" << t;
}

TEST(Axioms, GeneratedFamiliesPass)
{
  EXPECT_TRUE(axioms_check(ExplicitFamily::generated_by(ZPartialAction(kShift), 3)).ok());
  Rng rng(32);
  for (int i = 0; i < 50; ++i) {
    const PrefixMap m = random_prefix_map(rng, 4, 3);
    const AxiomReport r = axioms_check(ExplicitFamily::generated_by(ZPartialAction(m), 4));
    EXPECT_TRUE(r.ok()) << m.to_string() << ": " << (r.ok() ? "" : r.violations.front().detail);
  }
}

TEST(Axioms, IdentityAction)
{
  ExplicitFamily f;
  f.bound = 3;
  for (int t = -3; t <= 3; ++t) {
    f.domains[t] = ClopenSet::full();
    f.maps[t] = PrefixMap::identity();
  }
  EXPECT_TRUE(axioms_check(f).ok());
}

TEST(Axioms, TamperedDomainIsCaught)
{
  ExplicitFamily f = ExplicitFamily::generated_by(ZPartialAction(kShift), 3);
  f.domains[1] = ClopenSet::full();
  const AxiomReport r = axioms_check(f);
  ASSERT_FALSE(r.ok());
  EXPECT_TRUE(has_violation(r, 2, 1, -1));
}

TEST(Axioms, TamperedMapIsCaught)
{
  ExplicitFamily f = ExplicitFamily::generated_by(ZPartialAction(GeneratedMap::odometer().truncation(2)), 3);
  f.maps[2] = PrefixMap::parse("[00->10,10->11,010->001]");
  EXPECT_FALSE(axioms_check(f).ok());
  ExplicitFamily g = ExplicitFamily::generated_by(ZPartialAction(kShift), 2);
  g.maps[0] = PrefixMap::parse("[0->1,1->0]");
  EXPECT_TRUE(has_violation(axioms_check(g), 1, 0, 0));
}

TEST(DualPullback, Examples)
{
  const ZPartialAction a(kShift);
  EXPECT_EQ(dual_pullback(PiecewiseConstant::indicator(ClopenSet::parse("{0}")), a, 1),
            PiecewiseConstant::indicator(ClopenSet::parse("{1}")));
  EXPECT_TRUE(dual_pullback(PiecewiseConstant{}, a, 1).is_zero());
  EXPECT_THROW(dual_pullback(PiecewiseConstant::indicator(ClopenSet::parse("{1}")), a, 1), SupportViolation);
}

TEST(DualPullback, Homomorphism)
{
  Rng rng(33);
  const ZPartialAction a(GeneratedMap::odometer().truncation(2));
  for (int i = 0; i < 200; ++i) {
    const int t = rng.between(-3, 3);
    const ClopenSet dom = a.domain(-t);
    const PiecewiseConstant f = random_piecewise_in(rng, dom, 5);
    const PiecewiseConstant g = random_piecewise_in(rng, dom, 5);
    EXPECT_EQ(dual_pullback(f * g, a, t), dual_pullback(f, a, t) * dual_pullback(g, a, t));
    EXPECT_EQ(dual_pullback(f + g, a, t), dual_pullback(f, a, t) + dual_pullback(g, a, t));
    EXPECT_TRUE(is_subset(dual_pullback(f, a, t).support(), a.domain(t)));
    // pointwise: alpha_t(f)(h_t x) = f(x)
    for (int j = 0; j < 5 && !dom.is_empty(); ++j) {
      const Point x = random_point_in(rng, dom, 4, 3);
      const auto y = oracle::iterate(a.generator().rules(), t, x);
      ASSERT_TRUE(y);
      EXPECT_EQ(dual_pullback(f, a, t).at(*y), f.at(x));
    }
  }
}

TEST(DualPullback, Composition)
{
  Rng rng(34);
  const ZPartialAction a(GeneratedMap::odometer().truncation(2));
  for (int i = 0; i < 200; ++i) {
    const int t = rng.between(-3, 3);
    const int s = rng.between(-3, 3);
    const ClopenSet dom = set_intersection(a.domain(-s), a.domain(-s - t));
    const PiecewiseConstant f = random_piecewise_in(rng, dom, 5);
    EXPECT_EQ(dual_pullback(dual_pullback(f, a, s), a, t), dual_pullback(f, a, t + s));
  }
}
