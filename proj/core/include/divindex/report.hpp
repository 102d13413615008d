#pragma once

// Serialization of computed results. JSON numbers carry 12 significant
// digits; CSV outputs are long format. Output is a pure function of the
// inputs, so repeated runs are byte-identical.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "divindex/analysis.hpp"
#include "divindex/decomp.hpp"
#include "divindex/indexes.hpp"

namespace divindex {

/// %.12g-style text for a finite value.
std::string format_number(double value);

/// Rounds to 12 significant digits (the value JSON reports carry).
double round_significant(double value);

struct IndexResult {
  std::string index;  // "entropy", "divergence", "information_theory", ...
  std::optional<double> overall;
  std::optional<LocalIndexVector> local;
  std::string note;  // why `overall` is null, when it is
};

struct ComputeReport {
  std::string source;
  LogBase base;
  GroupSet groups;
  std::size_t n_units = 0;
  double total_population = 0.0;
  std::optional<double> radius;  // set for spatially weighted runs
  bool spatial = false;
  std::vector<IndexResult> indexes;
  std::optional<EquivalenceDiagnostics> equivalence;
  std::vector<std::string> notes;
};

std::string compute_json(const ComputeReport& report);
std::string compute_csv(const ComputeReport& report);
std::string compute_pretty(const ComputeReport& report);

std::string decomposition_json(const std::string& source, const GroupSet& groups,
                               std::span<const DecompositionReport> reports);
std::string decomposition_csv(std::span<const DecompositionReport> reports);
std::string decomposition_pretty(std::span<const DecompositionReport> reports);

std::string sweep_csv(const SweepCurve& curve);
std::string sweep_json(const SweepCurve& curve);

std::string correlation_json(const CorrelationReport& report);
std::string correlation_csv(const CorrelationReport& report);
std::string correlation_pretty(const CorrelationReport& report);

}  // namespace divindex
