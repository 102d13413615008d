#pragma once

// Scalar diversity, inequality and segregation indexes.
//
// Notation used in the comments: tau_i is unit i's averaging weight
// (its population), T = sum tau_i, pi_i is unit i's composition and pi the
// region's overall composition. Every sum treats 0 * log 0 as exactly 0.

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "divindex/log_base.hpp"
#include "divindex/popcore.hpp"

namespace divindex {

struct IndexValue {
  double value = 0.0;
  LogBase base;
};

/// Per-unit index values in table order; nullopt for zero-population units.
struct LocalIndexVector {
  std::vector<std::string> unit_ids;
  std::vector<std::optional<double>> values;
  LogBase base;

  std::size_t size() const { return values.size(); }
};

/// E = sum_m p_m log(1/p_m).
IndexValue entropy(const GroupDistribution& p, LogBase base = LogBase::base2());

/// D(P||Q) = sum_m p_m log(p_m/q_m). Throws SupportViolation (naming the
/// group when labels are given) if p_m > 0 where q_m = 0.
IndexValue kl_divergence(const GroupDistribution& p, const GroupDistribution& q,
                         LogBase base = LogBase::base2(),
                         std::span<const std::string> labels = {});

/// E_i for every unit.
LocalIndexVector entropy_local(const UnitTable& table, LogBase base = LogBase::base2());

/// Population-weighted mean of local entropies, sum (tau_i/T) E_i.
IndexValue mean_local_entropy(const UnitTable& table, LogBase base = LogBase::base2());

/// Overall entropy of the region, entropy(overall_distribution(table)).
IndexValue overall_entropy(const UnitTable& table, LogBase base = LogBase::base2());

/// D_i = D(pi_i || pi).
LocalIndexVector divergence_local(const UnitTable& table, LogBase base = LogBase::base2());

/// D = sum (tau_i/T) D_i.
IndexValue divergence_overall(const UnitTable& table, LogBase base = LogBase::base2());

/// H_i = 1 - E_i/E. Throws DegenerateRegion when E = 0.
LocalIndexVector info_theory_local(const UnitTable& table, LogBase base = LogBase::base2());

/// H = 1 - sum (tau_i/T) E_i / E. Throws DegenerateRegion when E = 0.
IndexValue info_theory_overall(const UnitTable& table, LogBase base = LogBase::base2());

/// Two-group Dissimilarity Index, (1/2) sum_i |tau_iA/T_A - tau_iB/T_B|,
/// over the named pair's counts only. Throws MissingGroup for an unknown
/// label or an absent group.
double dissimilarity_two_group(const UnitTable& table, std::string_view group_a,
                               std::string_view group_b);

/// Simpson's interaction index, sum_m p_m (1 - p_m).
double simpson_interaction(const GroupDistribution& p);

/// Multigroup Dissimilarity Index,
/// sum_m sum_i tau_i / (2 T I) |pi_im - pi_m| with I the Simpson index of the
/// overall composition. Throws DegenerateRegion when I = 0.
double dissimilarity_multigroup(const UnitTable& table);

struct IncomeObservation {
  double income = 0.0;  // x_i >= 0
  double weight = 1.0;  // tau_i >= 0
};

/// Theil index (1/T) sum tau_i (x_i/xbar) log(x_i/xbar) with the weighted
/// mean xbar. A NumGroups base resolves to the number of observations.
/// Throws ZeroMean when xbar = 0.
IndexValue theil_income(std::span<const IncomeObservation> incomes,
                        LogBase base = LogBase::base2());

}  // namespace divindex
