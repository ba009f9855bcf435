#include "oracles.hpp"

#include "pact/envelope.hpp"
#include "pact/errors.hpp"

#include <gtest/gtest.h>

using namespace pact;

namespace {

const PrefixMap kShift = PrefixMap::parse("[0->1]");

/// Germs (r, h^j(x)) over a few base points, so that many pairs are related.
std::vector<GermPair> orbit_germs(const ZPartialAction& a, Rng& rng, std::size_t count)
{
  std::vector<Point> base;
  for (int i = 0; i < 12; ++i)
    base.push_back(random_point(rng, 4, 2));
  std::vector<GermPair> out;
  while (out.size() < count) {
    const Point& x = base[rng.below(base.size())];
    const int j = rng.between(-3, 3);
    const auto y = oracle::iterate(a.generator().rules(), j, x);
    out.push_back({rng.between(-4, 4), y ? *y : x});
  }
  return out;
}

} // namespace

TEST(Related, Examples)
{
  const Action odo(GeneratedMap::odometer());
  EXPECT_TRUE(related(odo, 0, GermPair::parse("1:(0)"), GermPair::parse("0:1(0)")));
  EXPECT_FALSE(related(odo, 0, GermPair::parse("0:(0)"), GermPair::parse("1:(0)")));
  EXPECT_TRUE(related(odo, 3, GermPair::parse("2:011(0)"), GermPair::parse("2:011(0)")));
  EXPECT_THROW(related(odo, std::nullopt, GermPair::parse("0:(0)"), GermPair::parse("0:(0)")), LevelRequired);
  EXPECT_EQ(GermPair::parse("-1:01(10)").to_string(), "-1:01(10)");
}

TEST(Related, AgreesWithStepwiseOracle)
{
  Rng rng(41);
  for (std::size_t k = 0; k <= 3; ++k) {
    const ZPartialAction a(GeneratedMap::odometer().truncation(k));
    for (int i = 0; i < 300; ++i) {
      const GermPair p{rng.between(-4, 4), random_point(rng, 4, 2)};
      const int s = rng.between(-4, 4);
      const auto y = oracle::iterate(a.generator().rules(), p.index - s, p.point);
      const GermPair q{s, y ? *y : random_point(rng, 4, 2)};
      EXPECT_EQ(related(a, p, q), y.has_value() && *y == q.point) << p.to_string() << " " << q.to_string();
    }
  }
}

TEST(Related, EquivalenceOnSampledGerms)
{
  Rng rng(42);
  for (const PrefixMap& m : {kShift, GeneratedMap::odometer().truncation(2)}) {
    const ZPartialAction a(m);
    const auto germs = orbit_germs(a, rng, 300);
    const RelationProbeReport r = symmetry_transitivity_probe(a, germs);
    EXPECT_TRUE(r.ok()) << r.violations.front();
    EXPECT_GT(r.transitive_checks, germs.size());
  }
}

TEST(Related, MonotoneInLevel)
{
  Rng rng(43);
  const Action odo(GeneratedMap::odometer());
  for (std::size_t k = 0; k < 5; ++k) {
    const auto germs = orbit_germs(odo.at_level(k + 1), rng, 80);
    for (const auto& p : germs)
      for (const auto& q : germs)
        if (related(odo, k, p, q))
          EXPECT_TRUE(related(odo, k + 1, p, q));
  }
}

TEST(Hausdorff, ClopenGenerators)
{
  const HausdorffCertificate c = hausdorff_decide(Action(kShift), 4, 10);
  EXPECT_EQ(c.verdict, HausdorffCertificate::Verdict::Clopen);
  EXPECT_EQ(c.bound, 4);
  const HausdorffCertificate e = hausdorff_decide(Action(PrefixMap::parse("[]")), 4, 10);
  EXPECT_EQ(e.verdict, HausdorffCertificate::Verdict::Clopen);
  for (const auto& [t, x] : e.domains)
    EXPECT_TRUE(t == 0 ? x.is_full() : x.is_empty());

  Rng rng(44);
  for (int i = 0; i < 30; ++i) {
    const PrefixMap m = random_prefix_map(rng, 4, 3);
    const HausdorffCertificate r = hausdorff_decide(Action(m), 6, 10);
    ASSERT_EQ(r.verdict, HausdorffCertificate::Verdict::Clopen);
    ASSERT_EQ(r.domains.size(), 13u);
    for (const auto& [t, x] : r.domains)
      EXPECT_EQ(ClopenSet::normalize(x.words()), x);
  }
}

TEST(Hausdorff, OdometerWitness)
{
  const Action odo(GeneratedMap::odometer());
  const HausdorffCertificate c = hausdorff_decide(odo, 4, 10);
  ASSERT_EQ(c.verdict, HausdorffCertificate::Verdict::NonClopenWitness);
  EXPECT_EQ(c.t, -1);
  ASSERT_TRUE(c.point);
  EXPECT_EQ(*c.point, Point::max());
  const ClopenSet u = GeneratedMap::odometer().exhaustion(10);
  for (std::size_t j = 0; j <= 10; ++j) {
    EXPECT_TRUE(u.meets_cylinder(Word(j, '1')));
    EXPECT_FALSE(GeneratedMap::odometer().exhaustion(j).contains(Point::max()));
  }
  EXPECT_EQ(hausdorff_decide(odo, 4, 0).verdict, HausdorffCertificate::Verdict::Unknown);
}

TEST(Hausdorff, MultiCylinderResidualIsUnknown)
{
  // the domain exhausts [0] and [1] minus two points: residuals are two cylinders
  std::vector<PrefixRule> rules;
  for (std::size_t i = 0; i < 6; ++i) {
    rules.push_back({"0" + Word(i, '1') + "0", "0" + Word(i, '0') + "1"});
    rules.push_back({"1" + Word(i, '1') + "0", "1" + Word(i, '0') + "1"});
  }
  const HausdorffCertificate c = hausdorff_decide(Action(GeneratedMap::from_rules(rules)), 4, 8);
  EXPECT_EQ(c.verdict, HausdorffCertificate::Verdict::Unknown);
}

TEST(NonSeparable, OdometerPair)
{
  const Action odo(GeneratedMap::odometer());
  for (int t : {-1, 1}) {
    const NonSeparablePair pair = nonseparable_pair(odo, t, 8);
    EXPECT_EQ(pair.first.index, -t);
    EXPECT_EQ(pair.second.index, 0);
    EXPECT_EQ(pair.approach.size(), 8u);
    for (std::size_t j = 0; j < pair.approach.size(); ++j) {
      const auto& [x, y] = pair.approach[j];
      EXPECT_TRUE(related(odo, 8, {-t, x}, {0, y})) << x.to_string() << " " << y.to_string();
      EXPECT_GE(agreement(x, pair.first.point), j + 1);
      EXPECT_GE(agreement(y, pair.second.point), j + 1);
    }
    std::string why;
    EXPECT_TRUE(verify_nonseparable(odo, 8, pair, 8, &why)) << why;
    // the limit germs themselves are not related at any level
    EXPECT_FALSE(related(odo, 8, pair.first, pair.second));
  }
  const NonSeparablePair p = nonseparable_pair(odo, -1, 8);
  EXPECT_EQ(p.first.to_string(), "1:(1)");
  EXPECT_EQ(p.second.to_string(), "0:(0)");
}

TEST(NonSeparable, ClopenHasNoWitness)
{
  EXPECT_THROW(nonseparable_pair(Action(kShift), -1, 8), NoWitness);
  EXPECT_THROW(nonseparable_pair(Action(GeneratedMap::from_rules({{"0", "1"}})), -1, 8), NoWitness);
}

TEST(Etale, Examples)
{
  const ZPartialAction a(kShift);
  const EtaleReport r = etale_probe(a, 1, 0, ClopenSet::parse("{0}"));
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(r.range_image, ClopenSet::parse("{0}"));
  EXPECT_EQ(r.source_image, ClopenSet::parse("{1}"));

  const EtaleReport d = etale_probe(a, 2, 2, ClopenSet::full());
  EXPECT_TRUE(d.ok());
  EXPECT_EQ(d.range_image, d.source_image);

  const EtaleReport e = etale_probe(a, 1, 0, ClopenSet::empty());
  EXPECT_TRUE(e.ok());
  EXPECT_TRUE(e.source_image.is_empty());

  EXPECT_THROW(etale_probe(a, 1, 0, ClopenSet::parse("{1}")), BaseNotInDomain);
}

TEST(Etale, AllBasicOpens)
{
  for (const PrefixMap& m : {kShift, GeneratedMap::odometer().truncation(1)}) {
    const ZPartialAction a(m);
    for (int t = -3; t <= 3; ++t) {
      for (int s = -3; s <= 3; ++s) {
        const ClopenSet dom = a.domain(zindex::left_quotient(t, s));
        const EtaleReport r = etale_probe(a, t, s, dom);
        EXPECT_TRUE(r.ok()) << t << "," << s;
        // oracle: source image by stepping probe points
        for (const auto& w : dom.refine_to_depth(dom.max_length())) {
          const auto y = oracle::iterate(m.rules(), t - s, Point(w, "0"));
          ASSERT_TRUE(y);
          EXPECT_TRUE(r.source_image.contains(*y));
        }
      }
    }
  }
}

TEST(Groupoid, Examples)
{
  const ZPartialAction a(kShift);
  const Arrow z1{Point::parse("0(0)"), 1, 0};
  EXPECT_TRUE(in_groupoid(a, z1));
  EXPECT_TRUE(arrow_product(a, z1, {Point::parse("1(0)"), 0, 0}));
  EXPECT_FALSE(arrow_product(a, z1, {Point::parse("0(0)"), 0, 0}));
  const Arrow unit{Point::parse("01(1)"), 2, 2};
  const auto uu = arrow_product(a, unit, unit);
  ASSERT_TRUE(uu);
  EXPECT_EQ(*uu, unit);
  EXPECT_EQ(arrow_inverse(a, z1), (Arrow{Point::parse("1(0)"), 0, 1}));
}

TEST(Groupoid, RandomComposableTriples)
{
  Rng rng(45);
  for (const PrefixMap& m : {kShift, GeneratedMap::odometer().truncation(1), GeneratedMap::odometer().truncation(3)}) {
    const ZPartialAction a(m);
    std::vector<std::array<Arrow, 3>> triples;
    for (int i = 0; i < 1000; ++i)
      triples.push_back(sample_composable_triple(a, rng, 3));
    const GroupoidReport r = groupoid_probe(a, triples);
    EXPECT_TRUE(r.ok()) << r.violations.front();
    EXPECT_EQ(r.associativity_checks, 1000u);
  }
}

TEST(Quotient, Examples)
{
  const ZPartialAction a(kShift);
  const auto classes = quotient_decomposition(a, 1, 1);
  const std::set<std::set<Unit>> expected{
      {{1, "0"}, {0, "1"}}, {{0, "0"}, {-1, "1"}}, {{1, "1"}}, {{-1, "0"}}};
  EXPECT_EQ(oracle::as_sets(classes), expected);

  const auto trivial = quotient_decomposition(a, 0, 3);
  EXPECT_EQ(trivial.size(), 8u);

  EXPECT_THROW(quotient_decomposition(ZPartialAction(GeneratedMap::odometer().truncation(2)), 1, 1), DepthTooSmall);
}

TEST(Quotient, ClassCountMonotone)
{
  // Restricted to the units of bound n, the classes of bound n+1 are coarser.
  const ZPartialAction a(GeneratedMap::odometer().truncation(1));
  const std::size_t d = adapted_depth(a, 4);
  for (int n = 0; n < 4; ++n) {
    const auto small = quotient_decomposition(a, n, d);
    const auto big = quotient_decomposition(a, n + 1, d);
    std::size_t restricted = 0;
    for (const auto& cls : big)
      restricted += std::any_of(cls.begin(), cls.end(), [n](const Unit& u) { return std::abs(u.t) <= n; });
    EXPECT_LE(restricted, small.size());
    EXPECT_EQ(oracle::as_sets(small), oracle::brute_classes(a.generator().rules(), n, d));
  }
}
