#pragma once

// Comparative analyses between the Divergence Index and the Information
// Theory Index: functional-form sweeps over two-group local compositions,
// region-level correlation studies and equivalence diagnostics.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "divindex/indexes.hpp"

namespace divindex {

struct SweepSample {
  double local_share = 0.0;  // proportion of group 1 in the local area
  double divergence = 0.0;   // D_i
  double info_theory = 0.0;  // H_i
};

struct SweepCurve {
  GroupDistribution overall;
  LogBase base;
  std::vector<SweepSample> samples;
};

/// Evaluates D_i and H_i at `steps` evenly spaced local shares of group 1 in
/// [0, 1], endpoints included, for a two-group region with the given overall
/// composition. Throws InvalidInput for M != 2 or steps < 3, DegenerateRegion
/// when the overall entropy is 0.
SweepCurve sweep_local_indexes(const GroupDistribution& overall, std::size_t steps,
                               LogBase base = LogBase::base2());

enum class LocalSeries { Divergence, InfoTheory, Entropy, Dissimilarity };

std::string_view to_string(LocalSeries series);
std::optional<LocalSeries> parse_local_series(std::string_view text);

struct IndexPair {
  LocalSeries first = LocalSeries::Divergence;
  LocalSeries second = LocalSeries::InfoTheory;
};

/// Constructed per-unit dissimilarity series: sum_m |pi_im - pi_m| / (2 I),
/// I the Simpson interaction of the overall composition. Its
/// (tau_i/T)-weighted sum is the multigroup Dissimilarity Index.
LocalIndexVector local_dissimilarity(const UnitTable& table);

LocalIndexVector local_series(const UnitTable& table, LocalSeries series, LogBase base);

/// Region-level value of a series (D, H, mean local entropy, or multigroup
/// DI); nullopt when undefined for the table (e.g. H with E = 0).
std::optional<double> overall_series(const UnitTable& table, LocalSeries series,
                                     LogBase base);

/// Pearson r; nullopt when fewer than two points or either series is constant.
std::optional<double> pearson(std::span<const double> x, std::span<const double> y);
/// Spearman rho (Pearson on mid-ranks).
std::optional<double> spearman(std::span<const double> x, std::span<const double> y);

struct NamedRegion {
  std::string id;
  UnitTable table;
};

struct RegionCorrelation {
  std::string region_id;
  std::size_t n_units = 0;  // pairwise-complete units
  std::optional<double> pearson;
  std::optional<double> spearman;
  std::optional<double> overall_first;
  std::optional<double> overall_second;
  std::string flag;  // empty when the region contributed a local correlation
};

struct CorrelationReport {
  IndexPair pair;
  LogBase base;
  std::vector<RegionCorrelation> per_region;
  std::optional<double> cross_region_pearson;
  std::optional<double> cross_region_spearman;
  std::optional<double> mean_local_pearson;
  std::optional<double> mean_local_spearman;
  std::vector<std::string> flags;
};

/// Local correlation of the two series within each region (units with a
/// null value in either series are dropped pairwise; at least three are
/// needed), the mean of those correlations, and the cross-region correlation
/// of the overall values. Regions are evaluated concurrently; results are
/// reported in input order. Problems are flagged, never thrown.
CorrelationReport correlate_regions(std::span<const NamedRegion> regions, IndexPair pair,
                                    LogBase base = LogBase::base2());

struct EquivalenceDiagnostics {
  double overall_entropy = 0.0;
  double mean_local_entropy = 0.0;
  double divergence = 0.0;
  std::optional<double> info_theory;
  bool entropy_nonnegative = true;
  bool local_not_above_overall = true;
  /// Both of the above: H = D/E and D = H E are expected to hold.
  bool conditions_hold = true;
  std::optional<double> residual_h_vs_d_over_e;
  std::optional<double> residual_d_vs_h_times_e;
  double residual_d_vs_entropy_gap = 0.0;  // |D - (E - mean local E)|
  std::vector<std::string> notes;
};

EquivalenceDiagnostics equivalence_diagnostics(const UnitTable& table,
                                               LogBase base = LogBase::base2());

}  // namespace divindex
