#include "oracles.hpp"

#include "pact/errors.hpp"
#include "pact/sampling.hpp"

#include <gtest/gtest.h>

using namespace pact;

namespace {

std::set<Word> depth_cells(const ClopenSet& s, std::size_t d)
{
  return oracle::cells(s.words(), d);
}

constexpr std::size_t kTrials = 300;

} // namespace

TEST(Normalize, Examples)
{
  EXPECT_EQ(ClopenSet::normalize({"0", "00"}).words(), std::vector<Word>{"0"});
  EXPECT_TRUE(ClopenSet::normalize({"0", "1"}).is_full());
  EXPECT_EQ(ClopenSet::normalize({"0", "1"}).words(), std::vector<Word>{""});

  // oracle: same depth-2 cells
  const ClopenSet s = ClopenSet::normalize({"01", "00", "11"});
  EXPECT_EQ(s.words(), (std::vector<Word>{"0", "11"}));
  EXPECT_EQ(depth_cells(s, 2), oracle::cells({"01", "00", "11"}, 2));
}

TEST(Normalize, EmptyAndFull)
{
  EXPECT_TRUE(ClopenSet::normalize({}).is_empty());
  EXPECT_TRUE(ClopenSet::full().is_full());
  EXPECT_TRUE(ClopenSet::parse("{}").is_empty());
  EXPECT_TRUE(ClopenSet::parse("{ε}").is_full());
  EXPECT_EQ(ClopenSet::full().to_string(), "{ε}");
  EXPECT_EQ(ClopenSet::parse("{11, 0}").to_string(), "{0,11}");
}

TEST(Normalize, IdempotentAndUnionPreserving)
{
  Rng rng(11);
  for (std::size_t i = 0; i < kTrials; ++i) {
    std::vector<Word> raw;
    const auto count = rng.below(6);
    for (std::size_t j = 0; j < count; ++j)
      raw.push_back(random_word(rng, 0, 5));
    const ClopenSet s = ClopenSet::normalize(raw);
    EXPECT_EQ(ClopenSet::normalize(s.words()), s);
    EXPECT_EQ(depth_cells(s, 5), oracle::cells(raw, 5));
  }
}

TEST(Normalize, PointMembershipUnchanged)
{
  Rng rng(12);
  for (std::size_t i = 0; i < 20; ++i) {
    std::vector<Word> raw;
    const auto count = 1 + rng.below(5);
    for (std::size_t j = 0; j < count; ++j)
      raw.push_back(random_word(rng, 0, 6));
    const ClopenSet s = ClopenSet::normalize(raw);
    for (int k = 0; k < 50; ++k) {
      const Point x = random_point(rng, 5, 4);
      EXPECT_EQ(s.contains(x), oracle::member(raw, x)) << s.to_string() << " " << x.to_string();
    }
  }
}

TEST(BooleanOps, Examples)
{
  EXPECT_EQ(set_complement(ClopenSet::parse("{10}")), ClopenSet::parse("{0,11}"));
  EXPECT_EQ(depth_cells(set_complement(ClopenSet::parse("{10}")), 2), (std::set<Word>{"00", "01", "11"}));
  EXPECT_TRUE(set_intersection(ClopenSet::cylinder("0"), ClopenSet::cylinder("1")).is_empty());
  EXPECT_TRUE(set_union(ClopenSet::cylinder("0"), ClopenSet::cylinder("1")).is_full());
}

TEST(BooleanOps, AgreeWithCellEnumeration)
{
  Rng rng(13);
  constexpr std::size_t d = 6;
  for (std::size_t i = 0; i < kTrials; ++i) {
    const ClopenSet a = random_clopen(rng, 5);
    const ClopenSet b = random_clopen(rng, 5);
    const auto ca = depth_cells(a, d);
    const auto cb = depth_cells(b, d);
    std::set<Word> u, n, diff, comp;
    for (const auto& w : oracle::all_words(d)) {
      const bool in_a = ca.contains(w);
      const bool in_b = cb.contains(w);
      if (in_a || in_b)
        u.insert(w);
      if (in_a && in_b)
        n.insert(w);
      if (in_a && !in_b)
        diff.insert(w);
      if (!in_a)
        comp.insert(w);
    }
    EXPECT_EQ(depth_cells(set_union(a, b), d), u);
    EXPECT_EQ(depth_cells(set_intersection(a, b), d), n);
    EXPECT_EQ(depth_cells(set_difference(a, b), d), diff);
    EXPECT_EQ(depth_cells(set_complement(a), d), comp);
    EXPECT_EQ(is_subset(a, b), std::includes(cb.begin(), cb.end(), ca.begin(), ca.end()));
  }
}

TEST(BooleanOps, Identities)
{
  Rng rng(14);
  for (std::size_t i = 0; i < kTrials; ++i) {
    const ClopenSet a = random_clopen(rng, 6);
    const ClopenSet b = random_clopen(rng, 6);
    EXPECT_EQ(set_complement(set_complement(a)), a);
    EXPECT_TRUE(set_intersection(a, set_complement(a)).is_empty());
    EXPECT_TRUE(set_union(a, set_complement(a)).is_full());
    EXPECT_EQ(set_complement(set_union(a, b)), set_intersection(set_complement(a), set_complement(b)));
    EXPECT_EQ(set_complement(set_intersection(a, b)), set_union(set_complement(a), set_complement(b)));
  }
}

TEST(ContainsPoint, Examples)
{
  EXPECT_TRUE(ClopenSet::parse("{11}").contains(Point::max()));
  EXPECT_FALSE(ClopenSet::parse("{0}").contains(Point::max()));
  EXPECT_FALSE(ClopenSet::parse("{0,11}").contains(Point::parse("10(0)")));
}

TEST(ContainsPoint, AgreesWithUnrolling)
{
  Rng rng(15);
  for (std::size_t i = 0; i < kTrials; ++i) {
    const ClopenSet s = random_clopen(rng, 6);
    const Point x = random_point(rng, 6, 5);
    const Word prefix = x.unroll(64);
    bool expected = false;
    for (const auto& w : s.words())
      expected = expected || prefix.compare(0, w.size(), w) == 0;
    EXPECT_EQ(s.contains(x), expected);
  }
}

TEST(RefineToDepth, Examples)
{
  EXPECT_EQ(ClopenSet::parse("{0}").refine_to_depth(2), (std::vector<Word>{"00", "01"}));
  EXPECT_EQ(ClopenSet::full().refine_to_depth(1), (std::vector<Word>{"0", "1"}));
  EXPECT_EQ(ClopenSet::parse("{0,11}").refine_to_depth(2), (std::vector<Word>{"00", "01", "11"}));
  EXPECT_THROW(ClopenSet::parse("{011}").refine_to_depth(2), DepthTooSmall);
}

TEST(RefineToDepth, RoundTrip)
{
  Rng rng(16);
  for (std::size_t i = 0; i < kTrials; ++i) {
    const ClopenSet s = random_clopen(rng, 5);
    const auto refined = s.refine_to_depth(7);
    EXPECT_EQ(std::set<Word>(refined.begin(), refined.end()), depth_cells(s, 7));
    EXPECT_EQ(ClopenSet::normalize(refined), s);
  }
}

TEST(PointCanonical, Forms)
{
  EXPECT_EQ(Point("", "00"), Point::min());
  EXPECT_EQ(Point("0", "0"), Point::min());
  EXPECT_EQ(Point("1", "01"), Point("", "10"));
  EXPECT_EQ(Point::parse("01(10)").to_string(), "01(10)");
  EXPECT_EQ(Point::parse("0(10)").to_string(), "(01)");
  EXPECT_EQ(Point::parse("(1)"), Point::max());
  EXPECT_EQ(Point::parse("1(0)").to_string(), "1(0)");
  EXPECT_THROW(Point::parse("1(2)"), ParseError);
  EXPECT_THROW(Point::parse("10"), ParseError);
}

TEST(PointCanonical, EqualityMatchesUnrolling)
{
  Rng rng(17);
  for (std::size_t i = 0; i < 2000; ++i) {
    const Point x = random_point(rng, 3, 3);
    const Point y = random_point(rng, 3, 3);
    const std::size_t n = 2 * (std::max(x.preperiod().size(), y.preperiod().size()) + x.period().size() * y.period().size());
    EXPECT_EQ(x == y, x.unroll(n) == y.unroll(n)) << x.to_string() << " " << y.to_string();
  }
}

TEST(PointCanonical, DropPrependInverse)
{
  Rng rng(18);
  for (std::size_t i = 0; i < kTrials; ++i) {
    const Point x = random_point(rng, 5, 5);
    const Word w = random_word(rng, 0, 6);
    EXPECT_EQ(x.prepend(w).drop(w.size()), x);
    EXPECT_EQ(x.prepend(w).unroll(w.size() + 10), w + x.unroll(10));
  }
}
