#include <gtest/gtest.h>

#include <variant>

#include "garside/garside.hpp"
#include "test_support.hpp"

using namespace garside;
using garside::testing::Rng;
using garside::testing::uniform;

namespace {

CanonicalForm word(int n, std::vector<int> w) { return left_normal_form(BraidWord::from_ints(n, std::move(w))); }

}  // namespace

TEST(Periodic, DetectsRootsOfCentralElements) {
  const auto p = is_periodic(positive_braid(3, {1, 2}));
  ASSERT_TRUE(p);
  EXPECT_EQ(p->p, 3);
  EXPECT_EQ(p->m, 1);
  const auto q = is_periodic(delta_power(4, 2));
  ASSERT_TRUE(q);
  EXPECT_EQ(q->p, 3);
  EXPECT_EQ(q->m, 3);
  EXPECT_FALSE(is_periodic(word(3, {1, -2})));
  EXPECT_TRUE(std::holds_alternative<Periodic>(classify(positive_braid(5, {1, 2, 3, 4}))));
}

TEST(Reduction, InvariantStandardSystems) {
  const CanonicalForm a = positive_braid(4, {1, 3});
  const auto systems = invariant_standard_systems(a);
  EXPECT_FALSE(systems.empty());
  for (const StandardDescription& d : systems) EXPECT_EQ(act(a, standard_curves(d)), standard_curves(d));
  ASSERT_TRUE(find_standard_reduction(a));
  EXPECT_EQ(find_standard_reduction(a)->to_string(), "std(1-2,3-4)");
}

TEST(Reduction, ExampleBraidsWithoutStandardReduction) {
  EXPECT_FALSE(find_standard_reduction(word(4, {-2, -1, 2, 3})));
  EXPECT_FALSE(find_standard_reduction(positive_braid(6, {4, 1, 3, 2, 4, 5, 4, 3, 2})));
  const CanonicalForm b3 = positive_braid(7, {1, 2, 3, 2, 1, 4, 3, 5, 6, 5, 4, 3});
  for (int q = 1; q <= 3; ++q) EXPECT_FALSE(find_standard_reduction(power(b3, q)));
}

TEST(Classify, SplitExampleIsReducedAtFirstPower) {
  const CanonicalForm a = word(4, {-1, 2});
  const ClassificationResult r = classify(a);
  const Reduced* red = std::get_if<Reduced>(&r);
  ASSERT_NE(red, nullptr);
  EXPECT_EQ(red->q, 1);
  EXPECT_TRUE(red->certificate.holds());
  EXPECT_TRUE(red->tubes.exterior.is_identity());
  EXPECT_TRUE(red->invariant_under_alpha);
  EXPECT_EQ(act(a, red->pulled_back), red->pulled_back);
}

TEST(Classify, PeriodicExteriorExample) {
  const CanonicalForm a = positive_braid(6, {2, 1, 3, 2, 4, 5, 3, 4, 3});
  const ClassificationResult r = classify(a);
  const Reduced* red = std::get_if<Reduced>(&r);
  ASSERT_NE(red, nullptr);
  EXPECT_LT(red->q, 6);
  const ExtComponent e = ext_component(a, StandardDescription(6, {{1, 2}, {3, 4}, {5, 6}}));
  EXPECT_EQ(e.exterior, positive_braid(3, {1, 2}));
}

TEST(Classify, TranslationExampleFindsTheRoundCurveOnTheBraidItself) {
  // The braid is already in its reduced summit set and keeps punctures 2,3
  // together, so the very first power yields a standard reduction system.
  const CanonicalForm a = positive_braid(7, {1, 2, 3, 4, 3, 2, 1, 5, 4, 6, 5, 4});
  EXPECT_TRUE(reduced_sss_membership(a));
  const ClassificationResult r = classify(a);
  const Reduced* red = std::get_if<Reduced>(&r);
  ASSERT_NE(red, nullptr);
  EXPECT_EQ(red->q, 1);
  EXPECT_EQ(red->reduction.to_string(), "std(2-3)");
  EXPECT_EQ(act(a, red->pulled_back), red->pulled_back);
  // Deleting the second strand gives the exterior braid.
  EXPECT_EQ(red->tubes.exterior, delete_strands(a, {1, 3, 4, 5, 6, 7}));
}

TEST(Classify, RandomTubularBraidsAreReduced) {
  Rng rng(61);
  int reduced = 0;
  for (int t = 0; t < 80; ++t) {
    const int n = uniform(rng, 3, 5);
    const Composition c = garside::testing::random_curve_composition(rng, n);
    const CanonicalForm a0 = recombine(garside::testing::random_tubular(rng, c, 5, true));
    const CanonicalForm a = conjugate(garside::testing::random_braid(rng, n, 6), a0);
    const ClassificationResult r = classify(a);
    ASSERT_FALSE(std::holds_alternative<Undecided>(r)) << a.to_string();
    if (const Reduced* red = std::get_if<Reduced>(&r)) {
      ++reduced;
      ASSERT_TRUE(red->certificate.holds());
      ASSERT_EQ(act(power(a, red->q), red->pulled_back), red->pulled_back);
    }
  }
  EXPECT_GT(reduced, 40);
}

TEST(Classify, MaxPowerLimitsSearch) {
  const CanonicalForm a = word(3, {1, -2});  // pseudo-Anosov
  const ClassificationResult r = classify(a, ClassifyOptions{2});
  const Undecided* u = std::get_if<Undecided>(&r);
  ASSERT_NE(u, nullptr);
  EXPECT_EQ(u->powers, (std::vector<std::int64_t>{1, 2}));
  EXPECT_EQ(u->representatives.size(), 2u);
}

TEST(Split, KnownVerdicts) {
  EXPECT_EQ(is_split(word(4, {-1, 2})).verdict, SplitVerdict::Split);
  EXPECT_EQ(is_split(delta_power(4, 1)).verdict, SplitVerdict::NotSplit);
  EXPECT_EQ(is_split(identity_braid(4)).verdict, SplitVerdict::Split);
  EXPECT_EQ(is_split(positive_braid(5, {1, 2, 4})).verdict, SplitVerdict::Split);
  EXPECT_EQ(is_split(positive_braid(4, {1, 2, 3})).verdict, SplitVerdict::NotSplit);
}

TEST(Split, ConjugatesOfBlockBraids) {
  Rng rng(62);
  for (int t = 0; t < 40; ++t) {
    const int n = uniform(rng, 3, 5);
    const Composition c = garside::testing::random_curve_composition(rng, n);
    std::vector<CanonicalForm> blocks;
    for (int p : c.parts) blocks.push_back(garside::testing::random_braid(rng, p, 5));
    const CanonicalForm a = conjugate(garside::testing::random_braid(rng, n, 5), direct_sum(blocks));
    const SplitResult s = is_split(a);
    ASSERT_EQ(s.verdict, SplitVerdict::Split) << a.to_string();
    if (s.composition) ASSERT_TRUE(detube(conjugate(*s.conjugator, a), *s.composition).exterior.is_identity());
  }
}

TEST(Split, UndecidedWhenCapped) {
  const CanonicalForm a = conjugate(word(6, {2, -4}), positive_braid(6, {2, 1, 3, 2, 4, 5, 3, 4, 3}) * word(6, {-1}));
  EXPECT_EQ(is_split(a, 1).verdict, SplitVerdict::Undecided);
}

TEST(Exterior, RequiresInvariantUnnestedSystem) {
  const CanonicalForm a = word(4, {-1, 2});
  EXPECT_THROW(ext_component(a, StandardDescription(4, {{2, 4}})), InvalidArgument);
  EXPECT_THROW(ext_component(a, StandardDescription(5, {{1, 2}})), DimensionMismatch);
  const ExtComponent e = ext_component(a, StandardDescription(4, {{1, 3}}));
  EXPECT_TRUE(e.exterior.is_identity());
}

TEST(Exterior, PowersCommuteWithExterior) {
  Rng rng(63);
  for (int t = 0; t < 60; ++t) {
    const int n = uniform(rng, 3, 6);
    const Composition c = garside::testing::random_curve_composition(rng, n);
    const CanonicalForm g = garside::testing::random_braid(rng, n, 5);
    const CanonicalForm a = conjugate(g, recombine(garside::testing::random_tubular(rng, c, 4, true)));
    const CurveSystem sys = act(g, standard_curves(c.description()));
    const CanonicalForm e1 = ext_component(a, sys).exterior;
    const CanonicalForm e3 = ext_component(power(a, 3), sys).exterior;
    ASSERT_EQ(power(e1, 3), e3);
  }
}
