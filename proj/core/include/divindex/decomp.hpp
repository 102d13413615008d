#pragma once

// Additive between/within decomposition of the entropy-family indexes over a
// two-level unit hierarchy (units within districts within the region), and
// of a single distribution's entropy over supergroups of its groups.

#include <map>
#include <string>
#include <vector>

#include "divindex/log_base.hpp"
#include "divindex/popcore.hpp"

namespace divindex {

enum class IndexKind { Divergence, InfoTheory, Entropy };

std::string_view to_string(IndexKind kind);

/// One district (or supergroup) row of a decomposition. "Raw" scores are the
/// district's index values before weighting by its share of the population;
/// the weighted contributions sum to the report's between/within totals.
struct DistrictComponent {
  std::string district_id;
  double population_share = 0.0;
  double raw_between = 0.0;
  double weighted_between = 0.0;
  double raw_within = 0.0;
  double weighted_within = 0.0;
};

struct DecompositionReport {
  IndexKind index_kind = IndexKind::Divergence;
  LogBase base;
  double total = 0.0;
  double between = 0.0;
  double within_total = 0.0;
  std::vector<DistrictComponent> per_district;
  std::vector<std::string> warnings;

  /// contribution / total; 0 when the total is 0.
  double share(double contribution) const;
  double between_share() const { return share(between); }
  double within_share() const { return share(within_total); }
};

/// D = D_0 + sum_j (T_j/T) D_j, where D_0 compares each district's
/// composition to the region and D_j compares units to their district.
/// Districts with no population are dropped with a warning.
DecompositionReport decompose_divergence(const UnitTable& table, const Hierarchy& h,
                                         LogBase base = LogBase::base2());

/// H = sum_j (T_j/T)(E - E_j)/E + sum_j (T_j E_j)/(T E) H_j.
/// Throws DegenerateRegion when E = 0. A district with E_j = 0 contributes no
/// within term.
DecompositionReport decompose_info_theory(const UnitTable& table, const Hierarchy& h,
                                          LogBase base = LogBase::base2());

/// E = sum_g P_g log(1/P_g) + sum_g P_g E_g, where P_g is supergroup g's share
/// and E_g the entropy of the groups inside g. `grouping` maps every group
/// label to its supergroup label; supergroups are reported in first-appearance
/// order of the group set. Empty supergroups carry zero weight.
DecompositionReport decompose_entropy_supergroups(
    const GroupDistribution& p, const GroupSet& groups,
    const std::map<std::string, std::string>& grouping, LogBase base = LogBase::base2());

}  // namespace divindex
