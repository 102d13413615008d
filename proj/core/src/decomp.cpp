#include "divindex/decomp.hpp"

#include <unordered_map>

#include "divindex/error.hpp"
#include "divindex/indexes.hpp"

namespace divindex {
namespace {

struct DistrictState {
  std::string id;
  std::vector<std::size_t> rows;
  double population = 0.0;
  GroupDistribution composition;
};

// Districts with positive population and their compositions, taken as the
// weighted mean of member compositions so that additivity holds even when the
// table carries explicit averaging weights.
std::vector<DistrictState> populated_districts(
    const UnitTable& table, const Hierarchy& h,
    const std::vector<std::optional<GroupDistribution>>& locals,
    std::vector<std::string>& warnings) {
  const std::size_t m = table.groups().size();
  std::vector<DistrictState> out;
  for (auto& d : group_rows(table, h)) {
    double population = 0.0;
    std::vector<double> mix(m, 0.0);
    for (std::size_t i : d.rows) {
      const double w = table[i].averaging_weight();
      if (w == 0.0 || !locals[i]) continue;
      population += w;
      for (std::size_t g = 0; g < m; ++g) mix[g] += w * (*locals[i])[g];
    }
    if (!(population > 0.0)) {
      warnings.push_back("district '" + d.district_id +
                         "' has zero population and was dropped");
      continue;
    }
    out.push_back({std::move(d.district_id), std::move(d.rows), population,
                   GroupDistribution::from_counts(mix)});
  }
  return out;
}

}  // namespace

std::string_view to_string(IndexKind kind) {
  switch (kind) {
    case IndexKind::Divergence: return "divergence";
    case IndexKind::InfoTheory: return "information_theory";
    case IndexKind::Entropy: return "entropy";
  }
  return "divergence";
}

double DecompositionReport::share(double contribution) const {
  return total != 0.0 ? contribution / total : 0.0;
}

DecompositionReport decompose_divergence(const UnitTable& table, const Hierarchy& h,
                                         LogBase base) {
  DecompositionReport report;
  report.index_kind = IndexKind::Divergence;
  report.base = base;

  const GroupDistribution overall = overall_distribution(table);
  const double total = table.total_population();
  const auto locals = local_distributions(table);
  const auto& labels = table.groups().names();

  for (const auto& d : populated_districts(table, h, locals, report.warnings)) {
    DistrictComponent c;
    c.district_id = d.id;
    c.population_share = d.population / total;
    c.raw_between = kl_divergence(d.composition, overall, base, labels).value;
    double within = 0.0;
    for (std::size_t i : d.rows) {
      const double w = table[i].averaging_weight();
      if (w == 0.0 || !locals[i]) continue;
      within += w * kl_divergence(*locals[i], d.composition, base, labels).value;
    }
    c.raw_within = within / d.population;
    c.weighted_between = c.population_share * c.raw_between;
    c.weighted_within = c.population_share * c.raw_within;
    report.between += c.weighted_between;
    report.within_total += c.weighted_within;
    report.per_district.push_back(std::move(c));
  }
  report.total = divergence_overall(table, base).value;
  return report;
}

DecompositionReport decompose_info_theory(const UnitTable& table, const Hierarchy& h,
                                          LogBase base) {
  DecompositionReport report;
  report.index_kind = IndexKind::InfoTheory;
  report.base = base;

  const double e = overall_entropy(table, base).value;
  if (!(e > 0.0)) {
    throw Error(ErrorKind::DegenerateRegion,
                "Information Theory Index undefined: overall entropy is 0");
  }
  const double total = table.total_population();
  const auto locals = local_distributions(table);

  for (const auto& d : populated_districts(table, h, locals, report.warnings)) {
    DistrictComponent c;
    c.district_id = d.id;
    c.population_share = d.population / total;
    const double e_district = entropy(d.composition, base).value;
    c.raw_between = (e - e_district) / e;
    c.weighted_between = c.population_share * c.raw_between;
    if (e_district > 0.0) {
      double mean_local = 0.0;
      for (std::size_t i : d.rows) {
        const double w = table[i].averaging_weight();
        if (w == 0.0 || !locals[i]) continue;
        mean_local += w * entropy(*locals[i], base).value;
      }
      mean_local /= d.population;
      c.raw_within = 1.0 - mean_local / e_district;
      c.weighted_within = c.population_share * e_district / e * c.raw_within;
    }
    report.between += c.weighted_between;
    report.within_total += c.weighted_within;
    report.per_district.push_back(std::move(c));
  }
  report.total = info_theory_overall(table, base).value;
  return report;
}

DecompositionReport decompose_entropy_supergroups(
    const GroupDistribution& p, const GroupSet& groups,
    const std::map<std::string, std::string>& grouping, LogBase base) {
  if (p.size() != groups.size()) {
    throw Error(ErrorKind::DimensionMismatch,
                "distribution and group set differ in size");
  }
  base.check(p.size());

  std::vector<std::string> order;
  std::unordered_map<std::string, std::vector<std::size_t>> members;
  for (std::size_t m = 0; m < groups.size(); ++m) {
    auto it = grouping.find(groups[m]);
    if (it == grouping.end()) {
      throw Error(ErrorKind::InvalidInput,
                  "group '" + groups[m] + "' has no supergroup");
    }
    auto [slot, inserted] = members.try_emplace(it->second);
    if (inserted) order.push_back(it->second);
    slot->second.push_back(m);
  }

  DecompositionReport report;
  report.index_kind = IndexKind::Entropy;
  report.base = base;
  const std::size_t num_groups = p.size();

  for (const auto& g : order) {
    DistrictComponent c;
    c.district_id = g;
    double share = 0.0;
    for (std::size_t m : members[g]) share += p[m];
    c.population_share = share;
    if (share > 0.0) {
      c.raw_between = -base.log(share, num_groups);
      double within = 0.0;
      for (std::size_t m : members[g]) {
        if (p[m] > 0.0) within += (p[m] / share) * base.log(share / p[m], num_groups);
      }
      c.raw_within = within;
      c.weighted_between = share * c.raw_between;
      c.weighted_within = share * c.raw_within;
    }
    report.between += c.weighted_between;
    report.within_total += c.weighted_within;
    report.per_district.push_back(std::move(c));
  }
  report.total = entropy(p, base).value;
  return report;
}

}  // namespace divindex
