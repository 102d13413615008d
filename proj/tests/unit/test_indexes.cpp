#include <gtest/gtest.h>

#include <cmath>
#include <string>
#include <vector>

#include "divindex/indexes.hpp"
#include "helpers.hpp"
#include "oracle.hpp"

using namespace divindex;
using namespace testing_util;

namespace {

// Frozen reference values (independent double-checked computation).
constexpr double kEntropy7525 = 0.8112781244591328;
constexpr double kKlDetroit = 1.420883557870993;    // (.09,.91) || (.75,.25)
constexpr double kKlSuburbs = 0.07587213407801818;  // (.88,.12) || (.75,.25)
constexpr double kKlReversed = 0.792481250360578;   // (.25,.75) || (.75,.25)
constexpr double kLog2Of10 = 3.321928094887362;
constexpr double kHOfUniformUnitInSkewedRegion = -0.23262290680731135;
constexpr double kTheil114Natural = 0.23104906018664842;

GroupDistribution dist(std::vector<double> p) {
  return GroupDistribution::from_proportions(std::move(p));
}

}  // namespace

TEST(Entropy, FrozenValues) {
  EXPECT_DOUBLE_EQ(entropy(dist({0.5, 0.5})).value, 1.0);
  EXPECT_DOUBLE_EQ(entropy(dist({1.0, 0.0})).value, 0.0);
  EXPECT_NEAR(entropy(dist({0.75, 0.25})).value, kEntropy7525, 1e-12);
  EXPECT_NEAR(entropy(dist(std::vector<double>(10, 0.1))).value, kLog2Of10, 1e-12);
}

TEST(Entropy, NumGroupsBaseMaximumIsOne) {
  for (std::size_t m = 2; m <= 12; ++m) {
    const auto v = entropy(dist(std::vector<double>(m, 1.0 / static_cast<double>(m))),
                           LogBase::num_groups());
    EXPECT_NEAR(v.value, 1.0, 1e-12) << "M=" << m;
  }
}

TEST(Entropy, NumGroupsBaseRejectsSingleGroup) {
  EXPECT_EQ(error_kind_of([] { entropy(dist({1.0}), LogBase::num_groups()); }),
            ErrorKind::InvalidInput);
}

TEST(Entropy, ZeroTimesLogZeroIsZero) {
  const auto v = entropy(dist({0.0, 0.5, 0.5, 0.0}));
  EXPECT_FALSE(std::isnan(v.value));
  EXPECT_DOUBLE_EQ(v.value, 1.0);
}

TEST(KlDivergence, FrozenValues) {
  const auto metro = dist({0.75, 0.25});
  EXPECT_NEAR(kl_divergence(dist({0.09, 0.91}), metro).value, kKlDetroit, 1e-12);
  EXPECT_NEAR(kl_divergence(dist({0.88, 0.12}), metro).value, kKlSuburbs, 1e-12);
  EXPECT_NEAR(kl_divergence(dist({0.25, 0.75}), metro).value, kKlReversed, 1e-12);
  EXPECT_DOUBLE_EQ(kl_divergence(metro, metro).value, 0.0);
}

TEST(KlDivergence, SupportViolationNamesGroup) {
  const std::vector<std::string> labels{"White", "Black"};
  try {
    kl_divergence(dist({0.5, 0.5}), dist({1.0, 0.0}), LogBase::base2(), labels);
    FAIL() << "expected SupportViolation";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::SupportViolation);
    EXPECT_NE(std::string(e.what()).find("Black"), std::string::npos);
  }
}

TEST(KlDivergence, ZeroMassInPIsFine) {
  EXPECT_NEAR(kl_divergence(dist({1.0, 0.0}), dist({0.5, 0.5})).value, 1.0, 1e-15);
}

TEST(InfoTheory, LocalValueCanBeNegative) {
  // A perfectly mixed unit in a 75/25 region is more diverse than the region.
  const auto t = two_group({{50, 50}, {100, 0}});
  const auto local = info_theory_local(t);
  // Overall composition is (0.75, 0.25).
  EXPECT_NEAR(*local.values[0], kHOfUniformUnitInSkewedRegion, 1e-12);
  EXPECT_DOUBLE_EQ(*local.values[1], 1.0);
}

TEST(InfoTheory, DegenerateRegion) {
  const auto t = two_group({{10, 0}, {5, 0}});
  EXPECT_EQ(error_kind_of([&] { info_theory_overall(t); }), ErrorKind::DegenerateRegion);
  EXPECT_EQ(error_kind_of([&] { info_theory_local(t); }), ErrorKind::DegenerateRegion);
  EXPECT_DOUBLE_EQ(divergence_overall(t).value, 0.0);
}

TEST(Divergence, TwoFullySegregatedEqualUnitsGiveOneBit) {
  const auto t = two_group({{100, 0}, {0, 100}});
  EXPECT_DOUBLE_EQ(divergence_overall(t).value, 1.0);
  EXPECT_DOUBLE_EQ(info_theory_overall(t).value, 1.0);
}

TEST(Divergence, IdenticalUnitsGiveZero) {
  const auto t = two_group({{75, 25}, {150, 50}, {3, 1}});
  EXPECT_NEAR(divergence_overall(t).value, 0.0, 1e-15);
  EXPECT_NEAR(info_theory_overall(t).value, 0.0, 1e-15);
}

TEST(Divergence, EmptyUnitsAreSkippedWithNullLocalValue) {
  const auto t = two_group({{100, 0}, {0, 0}, {0, 100}});
  const auto local = divergence_local(t);
  ASSERT_EQ(local.size(), 3u);
  EXPECT_FALSE(local.values[1].has_value());
  EXPECT_DOUBLE_EQ(divergence_overall(t).value, 1.0);
}

TEST(Divergence, EmptyRegion) {
  const auto t = two_group({{0, 0}, {0, 0}});
  EXPECT_EQ(error_kind_of([&] { divergence_overall(t); }), ErrorKind::EmptyRegion);
}

TEST(Divergence, MatchesOracleOnMixedTable) {
  const oracle::Counts counts{{30, 10, 5}, {10, 30, 0}, {50, 50, 50}, {80, 20, 1}};
  const UnitTable t(GroupSet({"a", "b", "c"}),
                    {unit("1", counts[0]), unit("2", counts[1]), unit("3", counts[2]),
                     unit("4", counts[3])});
  const auto o = oracle::region(counts);
  EXPECT_NEAR(divergence_overall(t).value, static_cast<double>(o.d), 1e-12);
  EXPECT_NEAR(info_theory_overall(t).value, static_cast<double>(o.h), 1e-12);
  EXPECT_NEAR(mean_local_entropy(t).value, static_cast<double>(o.mean_local), 1e-12);
  EXPECT_NEAR(overall_entropy(t).value, static_cast<double>(o.e), 1e-12);
}

TEST(Dissimilarity, TwoGroupExamples) {
  EXPECT_DOUBLE_EQ(dissimilarity_two_group(two_group({{30, 10}, {10, 30}}), "A", "B"), 0.5);
  EXPECT_DOUBLE_EQ(dissimilarity_two_group(two_group({{100, 0}, {0, 50}}), "A", "B"), 1.0);
  EXPECT_DOUBLE_EQ(dissimilarity_two_group(two_group({{30, 10}, {60, 20}}), "A", "B"), 0.0);
}

TEST(Dissimilarity, TwoGroupUsesOnlyThePair) {
  const UnitTable t(GroupSet({"A", "B", "C"}),
                    {unit("1", {30, 10, 500}), unit("2", {10, 30, 0})});
  EXPECT_DOUBLE_EQ(dissimilarity_two_group(t, "A", "B"), 0.5);
}

TEST(Dissimilarity, MissingGroup) {
  const auto t = two_group({{30, 0}, {10, 0}});
  EXPECT_EQ(error_kind_of([&] { dissimilarity_two_group(t, "A", "Z"); }),
            ErrorKind::MissingGroup);
  EXPECT_EQ(error_kind_of([&] { dissimilarity_two_group(t, "A", "B"); }),
            ErrorKind::MissingGroup);
}

TEST(Dissimilarity, MultigroupReducesToTwoGroup) {
  const oracle::Counts rows{{30, 10}, {10, 30}, {5, 45}, {70, 2}};
  const auto t = two_group(rows);
  EXPECT_NEAR(dissimilarity_multigroup(t), dissimilarity_two_group(t, "A", "B"), 1e-12);
  EXPECT_NEAR(dissimilarity_multigroup(t),
              static_cast<double>(oracle::dissimilarity_multigroup(rows)), 1e-12);
}

TEST(Dissimilarity, MultigroupFullSeparationIsOne) {
  const UnitTable t(GroupSet({"A", "B", "C"}),
                    {unit("1", {40, 0, 0}), unit("2", {0, 25, 0}), unit("3", {0, 0, 7})});
  EXPECT_NEAR(dissimilarity_multigroup(t), 1.0, 1e-12);
}

TEST(Dissimilarity, MultigroupDegenerate) {
  const auto t = two_group({{3, 0}, {5, 0}});
  EXPECT_EQ(error_kind_of([&] { dissimilarity_multigroup(t); }),
            ErrorKind::DegenerateRegion);
}

TEST(SimpsonInteraction, Values) {
  EXPECT_DOUBLE_EQ(simpson_interaction(dist({0.5, 0.5})), 0.5);
  EXPECT_DOUBLE_EQ(simpson_interaction(dist({1.0, 0.0})), 0.0);
  EXPECT_DOUBLE_EQ(simpson_interaction(dist({0.75, 0.25})), 0.375);
}

TEST(Theil, FrozenAndBoundaryValues) {
  const std::vector<IncomeObservation> equal{{5, 1}, {5, 1}, {5, 1}};
  EXPECT_NEAR(theil_income(equal).value, 0.0, 1e-15);

  const std::vector<IncomeObservation> skew{{1, 1}, {1, 1}, {4, 1}};
  EXPECT_NEAR(theil_income(skew, LogBase::natural()).value, kTheil114Natural, 1e-12);

  // Everything held by one of N people: Theil = log N.
  const std::vector<IncomeObservation> one{{0, 1}, {0, 1}, {0, 1}, {12, 1}};
  EXPECT_NEAR(theil_income(one).value, 2.0, 1e-12);
  EXPECT_NEAR(theil_income(one, LogBase::num_groups()).value, 1.0, 1e-12);
}

TEST(Theil, WeightsActLikeReplication) {
  const std::vector<IncomeObservation> weighted{{1, 2}, {4, 1}};
  const std::vector<IncomeObservation> replicated{{1, 1}, {1, 1}, {4, 1}};
  EXPECT_NEAR(theil_income(weighted).value, theil_income(replicated).value, 1e-14);
}

TEST(Theil, ZeroMean) {
  const std::vector<IncomeObservation> zero{{0, 1}, {0, 3}};
  EXPECT_EQ(error_kind_of([&] { theil_income(zero); }), ErrorKind::ZeroMean);
}

TEST(LogBase, ParseAndLabels) {
  EXPECT_EQ(LogBase::parse("2"), LogBase::base2());
  EXPECT_EQ(LogBase::parse("e"), LogBase::natural());
  EXPECT_EQ(LogBase::parse("M"), LogBase::num_groups());
  EXPECT_FALSE(LogBase::parse("10"));
  EXPECT_EQ(LogBase::natural().unit(), "nats");
}
