#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "divindex/error.hpp"
#include "divindex/popcore.hpp"
#include "generators.hpp"
#include "helpers.hpp"

using namespace divindex;

using namespace testing_util;

TEST(GroupSet, RejectsEmptyAndDuplicates) {
  EXPECT_EQ(error_kind_of([] { GroupSet(std::vector<std::string>{}); }), ErrorKind::InvalidInput);
  EXPECT_EQ(error_kind_of([] { GroupSet({"a", "b", "a"}); }), ErrorKind::InvalidInput);
  GroupSet g({"White", "Black"});
  EXPECT_EQ(g.index_of("Black"), 1u);
  EXPECT_FALSE(g.index_of("Asian"));
}

TEST(GroupDistribution, ValidatesAndRenormalizes) {
  EXPECT_EQ(error_kind_of([] { GroupDistribution::from_proportions({0.5, 0.6}); }),
            ErrorKind::InvalidInput);
  EXPECT_EQ(error_kind_of([] { GroupDistribution::from_proportions({-0.1, 1.1}); }),
            ErrorKind::InvalidInput);
  const auto p = GroupDistribution::from_proportions({0.5, 0.5 + 5e-10});
  EXPECT_NEAR(p[0] + p[1], 1.0, 1e-15);
}

TEST(Proportions, NormalizesCounts) {
  auto p = proportions(unit("a", {10, 10}));
  EXPECT_DOUBLE_EQ(p[0], 0.5);
  EXPECT_DOUBLE_EQ(p[1], 0.5);
  p = proportions(unit("b", {75, 25}));
  EXPECT_DOUBLE_EQ(p[0], 0.75);
  EXPECT_DOUBLE_EQ(p[1], 0.25);
  p = proportions(unit("c", {0, 40}));
  EXPECT_DOUBLE_EQ(p[0], 0.0);
  EXPECT_DOUBLE_EQ(p[1], 1.0);
}

TEST(Proportions, ZeroPopulationIsAnError) {
  EXPECT_EQ(error_kind_of([] { proportions(unit("z", {0, 0})); }), ErrorKind::ZeroPopulation);
}

TEST(UnitTable, ValidatesRecords) {
  GroupSet g({"A", "B"});
  EXPECT_EQ(error_kind_of([&] { UnitTable(g, {unit("a", {1, 2, 3})}); }),
            ErrorKind::DimensionMismatch);
  EXPECT_EQ(error_kind_of([&] { UnitTable(g, {unit("a", {1, -2})}); }),
            ErrorKind::NegativeCount);
  EXPECT_EQ(error_kind_of([&] { UnitTable(g, {unit("a", {1, 2}), unit("a", {3, 4})}); }),
            ErrorKind::DuplicateUnitId);
}

TEST(OverallDistribution, Examples) {
  GroupSet g({"A", "B"});
  auto p = overall_distribution(UnitTable(g, {unit("a", {75, 25}), unit("b", {75, 25})}));
  EXPECT_DOUBLE_EQ(p[0], 0.75);
  p = overall_distribution(UnitTable(g, {unit("a", {100, 0}), unit("b", {0, 100})}));
  EXPECT_DOUBLE_EQ(p[0], 0.5);
  EXPECT_DOUBLE_EQ(p[1], 0.5);
}

TEST(OverallDistribution, EmptyRegion) {
  GroupSet g({"A", "B"});
  UnitTable empty(g, {unit("a", {0, 0}), unit("b", {0, 0})});
  EXPECT_EQ(error_kind_of([&] { overall_distribution(empty); }), ErrorKind::EmptyRegion);
}

TEST(OverallDistribution, DetroitMetroFromDistrictTotals) {
  // Counts from detroit_districts.csv (see tests/data/README.md).
  GroupSet g({"White", "Black"});
  UnitTable t(g, {unit("Detroit", {55675, 586725}), unit("Suburbs", {2861479, 384228})});
  const auto p = overall_distribution(t);
  EXPECT_NEAR(p[0], 0.75, 0.005);
  EXPECT_NEAR(p[1], 0.25, 0.005);
}

TEST(OverallDistribution, EqualsWeightedMeanOfUnitsAndIgnoresOrder) {
  gen::Rng rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    auto tc = gen::table(rng, 60, 5);
    const auto p = overall_distribution(tc.table);
    const double total = tc.table.total_population();
    std::vector<double> mean(p.size(), 0.0);
    for (const auto& u : tc.table.units()) {
      if (u.population() == 0.0) continue;
      const auto local = proportions(u);
      for (std::size_t m = 0; m < p.size(); ++m) mean[m] += u.population() / total * local[m];
    }
    for (std::size_t m = 0; m < p.size(); ++m) EXPECT_NEAR(p[m], mean[m], 1e-12);

    std::vector<UnitRecord> shuffled(tc.table.units().begin(), tc.table.units().end());
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    const auto q = overall_distribution(UnitTable(tc.table.groups(), shuffled));
    for (std::size_t m = 0; m < p.size(); ++m) EXPECT_NEAR(p[m], q[m], 1e-14);
  }
}

TEST(AggregateByDistrict, SingleDistrictSumsCounts) {
  GroupSet g({"A", "B"});
  UnitTable t(g, {unit("a", {1, 2}, "d"), unit("b", {3, 4}, "d"), unit("c", {5, 6}, "d")});
  const auto agg = aggregate_by_district(t, Hierarchy::from_table(t));
  ASSERT_EQ(agg.size(), 1u);
  EXPECT_EQ(agg[0].id, "d");
  EXPECT_EQ(agg[0].counts, (std::vector<double>{9, 12}));
}

TEST(AggregateByDistrict, FirstAppearanceOrderAndNoEmptyDistricts) {
  GroupSet g({"A", "B"});
  UnitTable t(g, {unit("a", {1, 0}, "z"), unit("b", {0, 1}, "y"), unit("c", {2, 2}, "z")});
  // The hierarchy lists a district order different from the table's.
  Hierarchy h({{"b", "y"}, {"a", "z"}, {"c", "z"}});
  const auto agg = aggregate_by_district(t, h);
  ASSERT_EQ(agg.size(), 2u);
  EXPECT_EQ(agg[0].id, "z");
  EXPECT_EQ(agg[1].id, "y");
}

TEST(AggregateByDistrict, DetroitDistrictProportions) {
  GroupSet g({"White", "Black"});
  UnitTable t(g, {unit("Detroit", {55675, 586725}, "Detroit"),
                  unit("Suburbs", {2861479, 384228}, "Suburbs")});
  const auto agg = aggregate_by_district(t, Hierarchy::from_table(t));
  EXPECT_NEAR(proportions(agg[0])[0], 0.09, 0.005);
  EXPECT_NEAR(proportions(agg[0])[1], 0.91, 0.005);
  EXPECT_NEAR(proportions(agg[1])[0], 0.88, 0.005);
  EXPECT_NEAR(proportions(agg[1])[1], 0.12, 0.005);
  // Detroit's share of the metro population.
  EXPECT_NEAR(agg[0].population() / agg.total_population(), 0.17, 0.01);
}

TEST(AggregateByDistrict, UnassignedUnit) {
  GroupSet g({"A", "B"});
  UnitTable t(g, {unit("a", {1, 0}), unit("b", {0, 1})});
  Hierarchy h(std::vector<std::pair<std::string, std::string>>{{"a", "x"}});
  EXPECT_EQ(error_kind_of([&] { aggregate_by_district(t, h); }), ErrorKind::UnassignedUnit);
  EXPECT_EQ(error_kind_of([&] { Hierarchy::from_table(t); }), ErrorKind::UnassignedUnit);
}

TEST(UnitTable, ZeroPopulationUnitsHaveNullLocalComposition) {
  GroupSet g({"A", "B"});
  UnitTable t(g, {unit("a", {1, 0}), unit("z", {0, 0})});
  const auto locals = local_distributions(t);
  EXPECT_TRUE(locals[0].has_value());
  EXPECT_FALSE(locals[1].has_value());
  EXPECT_DOUBLE_EQ(t.total_population(), 1.0);
}
