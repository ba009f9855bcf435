#include "oracles.hpp"

#include "pact/convolution_algebra.hpp"
#include "pact/errors.hpp"

#include <gtest/gtest.h>

using namespace pact;

namespace {

const ZPartialAction kShift(PrefixMap::parse("[0->1]"));

PiecewiseConstant ind(const char* set, const Scalar& c = Scalar(1))
{
  return PiecewiseConstant::indicator(ClopenSet::parse(set), c);
}

GroupoidFunction single(int r, int s, const PiecewiseConstant& f)
{
  return GroupoidFunction({{{r, s}, f}});
}

KernelElement entry(int r, int s, const PiecewiseConstant& f)
{
  return KernelElement({{{r, s}, f}});
}

/// (f*g)(x,r,u) evaluated pointwise from the defining sum, using stepwise
/// iteration of the generator.
Scalar convolution_at(const GroupoidFunction& f, const GroupoidFunction& g, const std::vector<PrefixRule>& gen,
                      const Point& x, int r, int u, int bound)
{
  Scalar total;
  for (int s = -bound; s <= bound; ++s) {
    const Scalar a = f.block(r, s).at(x);
    if (a.is_zero())
      continue;
    const auto y = oracle::iterate(gen, r - s, x);
    if (y)
      total += a * g.block(s, u).at(*y);
  }
  return total;
}

} // namespace

TEST(Convolve, Examples)
{
  EXPECT_EQ(cc_convolve(single(1, 0, ind("{0}")), single(0, 1, ind("{1}")), kShift), single(1, 1, ind("{0}")));
  EXPECT_TRUE(cc_convolve(single(0, 1, ind("{1}")), single(1, 2, ind("{}")), kShift).is_zero());
  EXPECT_TRUE(cc_convolve(single(1, 0, ind("{0}")), GroupoidFunction{}, kShift).is_zero());
  EXPECT_THROW(cc_convolve(single(1, 0, ind("{1}")), GroupoidFunction{}, kShift), SupportViolation);
}

TEST(Convolve, AgreesWithPointwiseSum)
{
  Rng rng(61);
  for (std::size_t k = 0; k <= 2; ++k) {
    const ZPartialAction a(GeneratedMap::odometer().truncation(k));
    for (int i = 0; i < 60; ++i) {
      const GroupoidFunction f = random_groupoid_function(rng, a, 2, 4, 4);
      const GroupoidFunction g = random_groupoid_function(rng, a, 2, 4, 4);
      const GroupoidFunction fg = cc_convolve(f, g, a);
      for (int j = 0; j < 20; ++j) {
        const int r = rng.between(-2, 2);
        const int u = rng.between(-2, 2);
        const Point x = random_point(rng, 5, 2);
        EXPECT_EQ(fg.block(r, u).at(x), convolution_at(f, g, a.generator().rules(), x, r, u, 2));
      }
    }
  }
}

TEST(Convolve, BilinearAndAssociative)
{
  Rng rng(62);
  for (const PrefixMap& m : {kShift.generator(), GeneratedMap::odometer().truncation(2)}) {
    const ZPartialAction a(m);
    for (int i = 0; i < 100; ++i) {
      const GroupoidFunction f = random_groupoid_function(rng, a, 3, 5, 3);
      const GroupoidFunction g = random_groupoid_function(rng, a, 3, 5, 3);
      const GroupoidFunction h = random_groupoid_function(rng, a, 3, 5, 3);
      EXPECT_EQ(cc_convolve(cc_convolve(f, g, a), h, a), cc_convolve(f, cc_convolve(g, h, a), a));
      EXPECT_EQ(cc_convolve(f, g + h, a), cc_convolve(f, g, a) + cc_convolve(f, h, a));

      const KernelElement k1 = psi(f), k2 = psi(g), k3 = psi(h);
      EXPECT_EQ(kernel_multiply(kernel_multiply(k1, k2, a), k3, a), kernel_multiply(k1, kernel_multiply(k2, k3, a), a));
    }
  }
}

TEST(Involution, Examples)
{
  EXPECT_EQ(cc_involution(single(1, 0, ind("{0}")), kShift), single(0, 1, ind("{1}")));
  const GroupoidFunction diag = single(2, 2, ind("{01}", Scalar(3)));
  EXPECT_EQ(cc_involution(diag, kShift), diag);
  const GroupoidFunction complex = single(0, 0, ind("{1}", Scalar(1, 2)));
  EXPECT_EQ(cc_involution(complex, kShift), single(0, 0, ind("{1}", Scalar(1, -2))));
}

TEST(Involution, Properties)
{
  Rng rng(63);
  for (const PrefixMap& m : {kShift.generator(), GeneratedMap::odometer().truncation(1)}) {
    const ZPartialAction a(m);
    for (int i = 0; i < 100; ++i) {
      const GroupoidFunction f = random_groupoid_function(rng, a, 3, 5, 3);
      const GroupoidFunction g = random_groupoid_function(rng, a, 3, 5, 3);
      EXPECT_EQ(cc_involution(cc_involution(f, a), a), f);
      EXPECT_EQ(cc_involution(cc_convolve(f, g, a), a), cc_convolve(cc_involution(g, a), cc_involution(f, a), a));
      const KernelElement k1 = psi(f), k2 = psi(g);
      EXPECT_EQ(kernel_involution(kernel_multiply(k1, k2, a), a),
                kernel_multiply(kernel_involution(k2, a), kernel_involution(k1, a), a));
    }
  }
}

TEST(KernelMultiply, Examples)
{
  EXPECT_EQ(kernel_multiply(entry(0, -1, ind("{1}")), entry(-1, 0, ind("{0}")), kShift), entry(0, 0, ind("{1}")));
  EXPECT_TRUE(kernel_multiply(entry(0, 1, ind("{0}")), entry(2, 2, ind("{1}")), kShift).is_zero());
  EXPECT_THROW(kernel_multiply(entry(0, -1, ind("{0}")), KernelElement{}, kShift), SupportViolation);
}

TEST(Psi, Examples)
{
  const KernelElement k = psi(single(0, 1, ind("{1}")));
  EXPECT_EQ(k, entry(0, -1, ind("{1}")));
  EXPECT_EQ(KernelElement::tag(0, -1), 1);
  EXPECT_TRUE(psi(GroupoidFunction{}).is_zero());
}

TEST(Psi, HomomorphismAndBijection)
{
  Rng rng(64);
  for (const PrefixMap& m : {kShift.generator(), GeneratedMap::odometer().truncation(2)}) {
    const ZPartialAction a(m);
    for (int i = 0; i < 100; ++i) {
      const GroupoidFunction f = random_groupoid_function(rng, a, 3, 6, 3);
      const GroupoidFunction g = random_groupoid_function(rng, a, 3, 6, 3);
      EXPECT_EQ(psi_inverse(psi(f)), f);
      EXPECT_NO_THROW(psi(f).validate(a));
      EXPECT_EQ(psi(cc_convolve(f, g, a)), kernel_multiply(psi(f), psi(g), a));
      EXPECT_EQ(psi(cc_involution(f, a)), kernel_involution(psi(f), a));
    }
  }
}

TEST(Psi, SuiteReport)
{
  EXPECT_TRUE(run_psi_suite(kShift, 7, 50, 3, 6).ok());
  EXPECT_EQ(run_psi_suite(kShift, 7, 0, 3, 6).trials, 0u);
}

TEST(Corner, Examples)
{
  const KernelElement k({{{0, 0}, ind("{ε}")}, {{0, 1}, ind("{0}")}});
  EXPECT_EQ(corner(k, 0, 1), entry(0, 1, ind("{0}")));
  EXPECT_EQ(left_projection(k, 0), k);
  EXPECT_EQ(right_projection(k, 1), entry(0, 1, ind("{0}")));
  EXPECT_TRUE(corner(k, 1, 0).is_zero());
}

TEST(Corner, ReconstructionAndPsiCompatibility)
{
  Rng rng(65);
  const ZPartialAction a(GeneratedMap::odometer().truncation(2));
  for (int i = 0; i < 100; ++i) {
    const GroupoidFunction f = random_groupoid_function(rng, a, 3, 5, 4);
    const KernelElement k = psi(f);
    KernelElement sum;
    for (const auto& [key, v] : k.entries())
      sum = sum + corner(k, key.first, key.second);
    EXPECT_EQ(sum, k);
    for (const auto& [key, v] : f.blocks())
      EXPECT_EQ(corner(k, -key.first, -key.second), psi(f.block_restriction(key.first, key.second)));
    // p_t k p_t lies in C_c(X_0) delta_0
    for (int t = -3; t <= 3; ++t) {
      const KernelElement c = corner(k, t, t);
      for (const auto& [key, v] : c.entries())
        EXPECT_EQ(KernelElement::tag(key.first, key.second), 0);
      EXPECT_NO_THROW(c.validate(a));
    }
  }
}

TEST(Shift, Examples)
{
  const KernelElement k = entry(0, 1, ind("{0}"));
  EXPECT_EQ(beta_shift(k, 1), entry(-1, 0, ind("{0}")));
  EXPECT_EQ(beta_shift(k, 0), k);
  EXPECT_EQ(alpha_shift(single(1, 0, ind("{0}")), 1), single(0, -1, ind("{0}")));
}

TEST(Shift, Automorphisms)
{
  Rng rng(66);
  const ZPartialAction a(GeneratedMap::odometer().truncation(1));
  for (int i = 0; i < 100; ++i) {
    const GroupoidFunction f = random_groupoid_function(rng, a, 3, 5, 3);
    const GroupoidFunction g = random_groupoid_function(rng, a, 3, 5, 3);
    const int t = rng.between(-3, 3);
    const int s = rng.between(-3, 3);
    const KernelElement k1 = psi(f), k2 = psi(g);
    EXPECT_EQ(beta_shift(kernel_multiply(k1, k2, a), t), kernel_multiply(beta_shift(k1, t), beta_shift(k2, t), a));
    EXPECT_EQ(beta_shift(kernel_involution(k1, a), t), kernel_involution(beta_shift(k1, t), a));
    EXPECT_EQ(beta_shift(beta_shift(k1, t), s), beta_shift(k1, t + s));
    EXPECT_EQ(alpha_shift(cc_convolve(f, g, a), t), cc_convolve(alpha_shift(f, t), alpha_shift(g, t), a));
    EXPECT_EQ(norm_squared(beta_shift(k1, t)), norm_squared(k1));
  }
}

TEST(Shift, EquivarianceSign)
{
  const auto e1 = equivariance_sign(kShift, 3, 30, 3, 3, 5);
  const auto e2 = equivariance_sign(ZPartialAction(GeneratedMap::odometer().truncation(2)), 3, 30, 3, 3, 5);
  ASSERT_TRUE(e1);
  ASSERT_TRUE(e2);
  EXPECT_EQ(*e1, *e2);
}

TEST(Norm, Examples)
{
  EXPECT_EQ(norm_squared(entry(0, 0, ind("{ε}"))), 1);
  const KernelElement two({{{0, 0}, ind("{0}")}, {{1, 1}, ind("{1}", Scalar(2))}});
  EXPECT_EQ(norm_squared(two), 5);
  const KernelElement mixed({{{0, 0}, PiecewiseConstant({{"0", Scalar(1, 1)}, {"1", Scalar(mpq_class(1, 2))}})}});
  EXPECT_EQ(norm_squared(mixed), 2);
  EXPECT_EQ(norm_squared(KernelElement{}), 0);
}

TEST(Json, RoundTrip)
{
  Rng rng(67);
  const ZPartialAction a(GeneratedMap::odometer().truncation(2));
  for (int i = 0; i < 50; ++i) {
    const GroupoidFunction f = random_groupoid_function(rng, a, 3, 5, 4);
    EXPECT_EQ(groupoid_function_from_json(to_json(f)), f);
    EXPECT_EQ(kernel_element_from_json(to_json(psi(f))), psi(f));
  }
  EXPECT_EQ(to_json(single(1, 0, ind("{0}", Scalar(mpq_class(1, 2), -3)))), R"([[[1,0],{"0":"1/2-3 i"}]])");
  EXPECT_THROW(groupoid_function_from_json("[[1,0]]"), ParseError);
  EXPECT_THROW(groupoid_function_from_json("{"), ParseError);
}
