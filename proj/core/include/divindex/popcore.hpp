#pragma once

// Population data model: group sets, compositions, unit tables and district
// hierarchies. Everything here is immutable once constructed.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace divindex {

/// Tolerance on the sum of a probability vector before it is rejected.
inline constexpr double kProportionSumTolerance = 1e-9;

class GroupSet {
 public:
  GroupSet() = default;
  /// Throws InvalidInput for an empty list or duplicate labels.
  explicit GroupSet(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& operator[](std::size_t m) const { return names_[m]; }
  std::optional<std::size_t> index_of(std::string_view name) const;

  friend bool operator==(const GroupSet& a, const GroupSet& b) {
    return a.names_ == b.names_;
  }

 private:
  std::vector<std::string> names_;
};

/// A probability vector over the M groups of a GroupSet.
class GroupDistribution {
 public:
  GroupDistribution() = default;

  /// Validates entries in [0,1] and a sum within kProportionSumTolerance of 1;
  /// sums that are off by less than the tolerance are renormalized.
  static GroupDistribution from_proportions(std::vector<double> proportions);
  /// counts / sum(counts). Throws ZeroPopulation when the counts sum to 0.
  static GroupDistribution from_counts(std::span<const double> counts);

  std::size_t size() const { return p_.size(); }
  double operator[](std::size_t m) const { return p_[m]; }
  std::span<const double> values() const { return p_; }

  friend bool operator==(const GroupDistribution&,
                         const GroupDistribution&) = default;

 private:
  explicit GroupDistribution(std::vector<double> p) : p_(std::move(p)) {}
  std::vector<double> p_;
};

struct Point {
  double x = 0.0;
  double y = 0.0;
  friend bool operator==(const Point&, const Point&) = default;
};

struct UnitRecord {
  std::string id;
  std::vector<double> counts;
  std::optional<std::string> district;
  std::optional<Point> location;
  // Person weight for population-weighted averages. Unset means the unit's own
  // population; spatially smoothed tables keep the unsmoothed population here.
  std::optional<double> weight;

  double population() const;
  double averaging_weight() const { return weight ? *weight : population(); }

  friend bool operator==(const UnitRecord&, const UnitRecord&) = default;
};

class UnitTable {
 public:
  UnitTable() = default;
  /// Checks count-vector length, nonnegative finite counts, unique ids.
  /// A table whose total population is zero is constructible; indexes over
  /// it raise EmptyRegion.
  UnitTable(GroupSet groups, std::vector<UnitRecord> units);

  const GroupSet& groups() const { return groups_; }
  std::span<const UnitRecord> units() const { return units_; }
  std::size_t size() const { return units_.size(); }
  const UnitRecord& operator[](std::size_t i) const { return units_[i]; }

  /// T: sum of averaging weights.
  double total_population() const;
  std::optional<std::size_t> find(std::string_view unit_id) const;
  bool has_coordinates() const;
  bool has_districts() const;

  /// Reference composition the local compositions are compared against.
  /// Unset means "this table's own overall composition".
  const std::optional<GroupDistribution>& reference() const { return reference_; }
  UnitTable with_reference(GroupDistribution reference) const;

  friend bool operator==(const UnitTable& a, const UnitTable& b) {
    return a.groups_ == b.groups_ && a.units_ == b.units_ &&
           a.reference_ == b.reference_;
  }

 private:
  GroupSet groups_;
  std::vector<UnitRecord> units_;
  std::optional<GroupDistribution> reference_;
  std::unordered_map<std::string, std::size_t> index_;
};

/// Partition of units into districts.
class Hierarchy {
 public:
  Hierarchy() = default;
  /// (unit_id, district_id) pairs; a unit listed twice is rejected.
  explicit Hierarchy(std::vector<std::pair<std::string, std::string>> assignment);

  /// Reads the district labels carried by the table's records; throws
  /// UnassignedUnit for any unit without one.
  static Hierarchy from_table(const UnitTable& table);

  std::optional<std::string_view> district_of(std::string_view unit_id) const;
  /// Districts in first-appearance order of the assignment.
  const std::vector<std::string>& districts() const { return districts_; }
  std::size_t size() const { return districts_.size(); }

 private:
  std::unordered_map<std::string, std::string> assignment_;
  std::vector<std::string> districts_;
};

/// Rows of a table grouped by district, in first-appearance order of the table.
struct DistrictRows {
  std::string district_id;
  std::vector<std::size_t> rows;
};

/// Throws UnassignedUnit if a unit of the table is missing from the hierarchy.
std::vector<DistrictRows> group_rows(const UnitTable& table, const Hierarchy& h);

/// pi_i = counts / tau_i. Throws ZeroPopulation for an empty unit.
GroupDistribution proportions(const UnitRecord& unit);

/// Local composition per unit; nullopt for units with zero population.
std::vector<std::optional<GroupDistribution>> local_distributions(const UnitTable& table);

/// Overall composition: the table's reference when set, otherwise the summed
/// counts over T (the weighted mean of local compositions when the table
/// carries explicit averaging weights). Throws EmptyRegion when T = 0.
GroupDistribution overall_distribution(const UnitTable& table);

/// One record per district holding summed counts, ordered by first
/// appearance in the table. Throws UnassignedUnit.
UnitTable aggregate_by_district(const UnitTable& table, const Hierarchy& h);

/// Rows [rows] of the table as a standalone table (no reference carried over).
UnitTable select_rows(const UnitTable& table, std::span<const std::size_t> rows);

}  // namespace divindex
