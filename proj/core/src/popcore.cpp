#include "divindex/popcore.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <unordered_set>

#include "divindex/error.hpp"

namespace divindex {

GroupSet::GroupSet(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.empty()) {
    throw Error(ErrorKind::InvalidInput, "a group set needs at least one group");
  }
  std::unordered_set<std::string> seen;
  for (const auto& name : names_) {
    if (!seen.insert(name).second) {
      throw Error(ErrorKind::InvalidInput, "duplicate group label '" + name + "'");
    }
  }
}

std::optional<std::size_t> GroupSet::index_of(std::string_view name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - names_.begin());
}

GroupDistribution GroupDistribution::from_proportions(std::vector<double> proportions) {
  if (proportions.empty()) {
    throw Error(ErrorKind::InvalidInput, "empty distribution");
  }
  double sum = 0.0;
  for (double p : proportions) {
    if (!std::isfinite(p) || p < 0.0 || p > 1.0) {
      throw Error(ErrorKind::InvalidInput,
                  "proportion " + std::to_string(p) + " outside [0,1]");
    }
    sum += p;
  }
  if (std::abs(sum - 1.0) > kProportionSumTolerance) {
    throw Error(ErrorKind::InvalidInput,
                "proportions sum to " + std::to_string(sum) + ", not 1");
  }
  if (sum != 1.0) {
    for (double& p : proportions) p /= sum;
  }
  return GroupDistribution(std::move(proportions));
}

GroupDistribution GroupDistribution::from_counts(std::span<const double> counts) {
  const double total = std::accumulate(counts.begin(), counts.end(), 0.0);
  if (!(total > 0.0)) {
    throw Error(ErrorKind::ZeroPopulation, "unit has zero population");
  }
  std::vector<double> p(counts.size());
  std::transform(counts.begin(), counts.end(), p.begin(),
                 [total](double c) { return c / total; });
  return GroupDistribution(std::move(p));
}

double UnitRecord::population() const {
  return std::accumulate(counts.begin(), counts.end(), 0.0);
}

UnitTable::UnitTable(GroupSet groups, std::vector<UnitRecord> units)
    : groups_(std::move(groups)), units_(std::move(units)) {
  const std::size_t m = groups_.size();
  index_.reserve(units_.size());
  for (std::size_t i = 0; i < units_.size(); ++i) {
    const auto& u = units_[i];
    if (u.counts.size() != m) {
      throw Error(ErrorKind::DimensionMismatch,
                  "unit '" + u.id + "' has " + std::to_string(u.counts.size()) +
                      " counts, expected " + std::to_string(m));
    }
    for (double c : u.counts) {
      if (!std::isfinite(c) || c < 0.0) {
        throw Error(ErrorKind::NegativeCount,
                    "unit '" + u.id + "' has invalid count " + std::to_string(c));
      }
    }
    if (u.weight && (!std::isfinite(*u.weight) || *u.weight < 0.0)) {
      throw Error(ErrorKind::InvalidInput, "unit '" + u.id + "' has a negative weight");
    }
    if (u.weight && *u.weight > 0.0 && !(u.population() > 0.0)) {
      throw Error(ErrorKind::InvalidInput,
                  "unit '" + u.id + "' has positive weight but no population");
    }
    if (!index_.emplace(u.id, i).second) {
      throw Error(ErrorKind::DuplicateUnitId, "duplicate unit id '" + u.id + "'");
    }
  }
}

double UnitTable::total_population() const {
  double total = 0.0;
  for (const auto& u : units_) total += u.averaging_weight();
  return total;
}

std::optional<std::size_t> UnitTable::find(std::string_view unit_id) const {
  auto it = index_.find(std::string(unit_id));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool UnitTable::has_coordinates() const {
  return !units_.empty() &&
         std::all_of(units_.begin(), units_.end(),
                     [](const UnitRecord& u) { return u.location.has_value(); });
}

bool UnitTable::has_districts() const {
  return std::any_of(units_.begin(), units_.end(),
                     [](const UnitRecord& u) { return u.district.has_value(); });
}

UnitTable UnitTable::with_reference(GroupDistribution reference) const {
  if (reference.size() != groups_.size()) {
    throw Error(ErrorKind::DimensionMismatch,
                "reference distribution has " + std::to_string(reference.size()) +
                    " groups, table has " + std::to_string(groups_.size()));
  }
  UnitTable copy = *this;
  copy.reference_ = std::move(reference);
  return copy;
}

Hierarchy::Hierarchy(std::vector<std::pair<std::string, std::string>> assignment) {
  assignment_.reserve(assignment.size());
  std::unordered_set<std::string> seen_districts;
  for (auto& [unit, district] : assignment) {
    if (seen_districts.insert(district).second) districts_.push_back(district);
    if (!assignment_.emplace(std::move(unit), std::move(district)).second) {
      throw Error(ErrorKind::InvalidInput, "unit assigned to more than one district");
    }
  }
}

Hierarchy Hierarchy::from_table(const UnitTable& table) {
  std::vector<std::pair<std::string, std::string>> assignment;
  assignment.reserve(table.size());
  for (const auto& u : table.units()) {
    if (!u.district) {
      throw Error(ErrorKind::UnassignedUnit, "unit '" + u.id + "' has no district");
    }
    assignment.emplace_back(u.id, *u.district);
  }
  return Hierarchy(std::move(assignment));
}

std::optional<std::string_view> Hierarchy::district_of(std::string_view unit_id) const {
  auto it = assignment_.find(std::string(unit_id));
  if (it == assignment_.end()) return std::nullopt;
  return std::string_view(it->second);
}

std::vector<DistrictRows> group_rows(const UnitTable& table, const Hierarchy& h) {
  std::vector<DistrictRows> out;
  std::unordered_map<std::string_view, std::size_t> slot;
  for (std::size_t i = 0; i < table.size(); ++i) {
    const auto district = h.district_of(table[i].id);
    if (!district) {
      throw Error(ErrorKind::UnassignedUnit,
                  "unit '" + table[i].id + "' is not assigned to a district");
    }
    auto [it, inserted] = slot.emplace(*district, out.size());
    if (inserted) out.push_back({std::string(*district), {}});
    out[it->second].rows.push_back(i);
  }
  return out;
}

GroupDistribution proportions(const UnitRecord& unit) {
  try {
    return GroupDistribution::from_counts(unit.counts);
  } catch (const Error& e) {
    throw Error(e.kind(), "unit '" + unit.id + "' has zero population");
  }
}

std::vector<std::optional<GroupDistribution>> local_distributions(const UnitTable& table) {
  std::vector<std::optional<GroupDistribution>> out;
  out.reserve(table.size());
  for (const auto& u : table.units()) {
    if (u.population() > 0.0) {
      out.emplace_back(GroupDistribution::from_counts(u.counts));
    } else {
      out.emplace_back(std::nullopt);
    }
  }
  return out;
}

GroupDistribution overall_distribution(const UnitTable& table) {
  if (table.reference()) return *table.reference();
  const double total = table.total_population();
  if (!(total > 0.0)) {
    throw Error(ErrorKind::EmptyRegion, "region has zero total population");
  }
  const std::size_t m = table.groups().size();
  const bool explicit_weights = std::any_of(
      table.units().begin(), table.units().end(),
      [](const UnitRecord& u) { return u.weight.has_value(); });

  std::vector<double> sums(m, 0.0);
  if (!explicit_weights) {
    for (const auto& u : table.units()) {
      for (std::size_t g = 0; g < m; ++g) sums[g] += u.counts[g];
    }
    return GroupDistribution::from_counts(sums);
  }
  for (const auto& u : table.units()) {
    const double w = u.averaging_weight();
    if (w == 0.0) continue;
    const double pop = u.population();
    for (std::size_t g = 0; g < m; ++g) sums[g] += w * (u.counts[g] / pop);
  }
  return GroupDistribution::from_counts(sums);
}

UnitTable aggregate_by_district(const UnitTable& table, const Hierarchy& h) {
  const std::size_t m = table.groups().size();
  const bool explicit_weights = std::any_of(
      table.units().begin(), table.units().end(),
      [](const UnitRecord& u) { return u.weight.has_value(); });

  std::vector<UnitRecord> districts;
  for (const auto& d : group_rows(table, h)) {
    UnitRecord rec;
    rec.id = d.district_id;
    rec.district = d.district_id;
    rec.counts.assign(m, 0.0);
    double weight = 0.0;
    for (std::size_t i : d.rows) {
      for (std::size_t g = 0; g < m; ++g) rec.counts[g] += table[i].counts[g];
      weight += table[i].averaging_weight();
    }
    if (explicit_weights) rec.weight = weight;
    districts.push_back(std::move(rec));
  }
  UnitTable out(table.groups(), std::move(districts));
  if (table.reference()) out = out.with_reference(*table.reference());
  return out;
}

UnitTable select_rows(const UnitTable& table, std::span<const std::size_t> rows) {
  std::vector<UnitRecord> units;
  units.reserve(rows.size());
  for (std::size_t i : rows) units.push_back(table[i]);
  return UnitTable(table.groups(), std::move(units));
}

}  // namespace divindex
