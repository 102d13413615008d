#include "divindex/analysis.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numeric>
#include <thread>

#include "divindex/error.hpp"

namespace divindex {
namespace {

// Runs fn(i) for i in [0, n) on a small worker pool. Each index writes only
// its own output slot, so callers get results in input order.
template <class F>
void parallel_for(std::size_t n, F&& fn) {
  const std::size_t workers =
      std::min<std::size_t>(n, std::max(1u, std::thread::hardware_concurrency()));
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < n; i = next++) fn(i);
    });
  }
}

std::vector<double> mid_ranks(std::span<const double> v) {
  std::vector<std::size_t> order(v.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return v[a] < v[b]; });
  std::vector<double> ranks(v.size());
  for (std::size_t i = 0; i < order.size();) {
    std::size_t j = i;
    while (j + 1 < order.size() && v[order[j + 1]] == v[order[i]]) ++j;
    const double rank = 0.5 * static_cast<double>(i + j) + 1.0;
    for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = rank;
    i = j + 1;
  }
  return ranks;
}

std::optional<double> mean_of(const std::vector<double>& v) {
  if (v.empty()) return std::nullopt;
  return std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}

}  // namespace

SweepCurve sweep_local_indexes(const GroupDistribution& overall, std::size_t steps,
                               LogBase base) {
  if (overall.size() != 2) {
    throw Error(ErrorKind::InvalidInput, "sweeps are defined for two-group regions");
  }
  if (steps < 3) {
    throw Error(ErrorKind::InvalidInput, "a sweep needs at least 3 steps");
  }
  const double e = entropy(overall, base).value;
  if (!(e > 0.0)) {
    throw Error(ErrorKind::DegenerateRegion, "overall entropy is 0");
  }
  SweepCurve curve{overall, base, {}};
  curve.samples.reserve(steps);
  for (std::size_t k = 0; k < steps; ++k) {
    const double share = static_cast<double>(k) / static_cast<double>(steps - 1);
    const auto local = GroupDistribution::from_proportions({share, 1.0 - share});
    curve.samples.push_back({share, kl_divergence(local, overall, base).value,
                             1.0 - entropy(local, base).value / e});
  }
  return curve;
}

std::string_view to_string(LocalSeries series) {
  switch (series) {
    case LocalSeries::Divergence: return "divergence";
    case LocalSeries::InfoTheory: return "information_theory";
    case LocalSeries::Entropy: return "entropy";
    case LocalSeries::Dissimilarity: return "dissimilarity";
  }
  return "divergence";
}

std::optional<LocalSeries> parse_local_series(std::string_view text) {
  if (text == "divergence" || text == "D") return LocalSeries::Divergence;
  if (text == "information_theory" || text == "information-theory" || text == "H")
    return LocalSeries::InfoTheory;
  if (text == "entropy" || text == "E") return LocalSeries::Entropy;
  if (text == "dissimilarity" || text == "DI") return LocalSeries::Dissimilarity;
  return std::nullopt;
}

LocalIndexVector local_dissimilarity(const UnitTable& table) {
  const GroupDistribution overall = overall_distribution(table);
  const double interaction = simpson_interaction(overall);
  if (!(interaction > 0.0)) {
    throw Error(ErrorKind::DegenerateRegion,
                "Dissimilarity Index undefined: region has a single group");
  }
  const auto locals = local_distributions(table);
  LocalIndexVector out;
  for (std::size_t i = 0; i < table.size(); ++i) {
    out.unit_ids.push_back(table[i].id);
    if (!locals[i]) {
      out.values.emplace_back(std::nullopt);
      continue;
    }
    double dev = 0.0;
    for (std::size_t m = 0; m < overall.size(); ++m) {
      dev += std::abs((*locals[i])[m] - overall[m]);
    }
    out.values.emplace_back(dev / (2.0 * interaction));
  }
  return out;
}

LocalIndexVector local_series(const UnitTable& table, LocalSeries series, LogBase base) {
  switch (series) {
    case LocalSeries::Divergence: return divergence_local(table, base);
    case LocalSeries::InfoTheory: return info_theory_local(table, base);
    case LocalSeries::Entropy: return entropy_local(table, base);
    case LocalSeries::Dissimilarity: return local_dissimilarity(table);
  }
  return divergence_local(table, base);
}

std::optional<double> overall_series(const UnitTable& table, LocalSeries series,
                                     LogBase base) {
  try {
    switch (series) {
      case LocalSeries::Divergence: return divergence_overall(table, base).value;
      case LocalSeries::InfoTheory: return info_theory_overall(table, base).value;
      case LocalSeries::Entropy: return mean_local_entropy(table, base).value;
      case LocalSeries::Dissimilarity: return dissimilarity_multigroup(table);
    }
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::DegenerateRegion) throw;
  }
  return std::nullopt;
}

std::optional<double> pearson(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) {
    throw Error(ErrorKind::DimensionMismatch, "correlated series differ in length");
  }
  const std::size_t n = x.size();
  if (n < 2) return std::nullopt;
  const auto [xmin, xmax] = std::minmax_element(x.begin(), x.end());
  const auto [ymin, ymax] = std::minmax_element(y.begin(), y.end());
  if (*xmin == *xmax || *ymin == *ymax) return std::nullopt;

  const double mx = std::accumulate(x.begin(), x.end(), 0.0) / static_cast<double>(n);
  const double my = std::accumulate(y.begin(), y.end(), 0.0) / static_cast<double>(n);
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double dx = x[i] - mx;
    const double dy = y[i] - my;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  if (!(sxx > 0.0) || !(syy > 0.0)) return std::nullopt;
  return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

std::optional<double> spearman(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) {
    throw Error(ErrorKind::DimensionMismatch, "correlated series differ in length");
  }
  const auto rx = mid_ranks(x);
  const auto ry = mid_ranks(y);
  return pearson(rx, ry);
}

CorrelationReport correlate_regions(std::span<const NamedRegion> regions, IndexPair pair,
                                    LogBase base) {
  CorrelationReport report;
  report.pair = pair;
  report.base = base;
  report.per_region.resize(regions.size());

  parallel_for(regions.size(), [&](std::size_t r) {
    const auto& region = regions[r];
    auto& out = report.per_region[r];
    out.region_id = region.id;
    try {
      out.overall_first = overall_series(region.table, pair.first, base);
      out.overall_second = overall_series(region.table, pair.second, base);

      const auto a = local_series(region.table, pair.first, base);
      const auto b = local_series(region.table, pair.second, base);
      std::vector<double> xs, ys;
      for (std::size_t i = 0; i < a.size(); ++i) {
        if (a.values[i] && b.values[i]) {
          xs.push_back(*a.values[i]);
          ys.push_back(*b.values[i]);
        }
      }
      out.n_units = xs.size();
      if (xs.size() < 3) {
        out.flag = "InsufficientData: fewer than 3 populated units";
        return;
      }
      out.pearson = pearson(xs, ys);
      out.spearman = spearman(xs, ys);
      if (!out.pearson) out.flag = "InsufficientData: zero variance in a local series";
    } catch (const Error& e) {
      out.flag = std::string(to_string(e.kind())) + ": " + e.what();
    }
  });

  std::vector<double> local_r, local_rho, first, second;
  for (const auto& rc : report.per_region) {
    if (!rc.flag.empty()) report.flags.push_back(rc.region_id + ": " + rc.flag);
    if (rc.pearson) local_r.push_back(*rc.pearson);
    if (rc.spearman && rc.pearson) local_rho.push_back(*rc.spearman);
    if (rc.overall_first && rc.overall_second) {
      first.push_back(*rc.overall_first);
      second.push_back(*rc.overall_second);
    }
  }
  report.mean_local_pearson = mean_of(local_r);
  report.mean_local_spearman = mean_of(local_rho);

  if (first.size() < 2) {
    report.flags.push_back("cross-region: InsufficientData: fewer than 2 regions");
  } else {
    report.cross_region_pearson = pearson(first, second);
    report.cross_region_spearman = spearman(first, second);
    if (!report.cross_region_pearson) {
      report.flags.push_back("cross-region: InsufficientData: zero variance across regions");
    }
  }
  return report;
}

EquivalenceDiagnostics equivalence_diagnostics(const UnitTable& table, LogBase base) {
  EquivalenceDiagnostics d;
  d.overall_entropy = overall_entropy(table, base).value;
  d.mean_local_entropy = mean_local_entropy(table, base).value;
  d.divergence = divergence_overall(table, base).value;
  d.entropy_nonnegative = d.overall_entropy >= 0.0;
  // Slack for rounding when local areas reproduce the overall composition.
  d.local_not_above_overall = d.mean_local_entropy <= d.overall_entropy + 1e-12;
  d.conditions_hold = d.entropy_nonnegative && d.local_not_above_overall;
  d.residual_d_vs_entropy_gap =
      std::abs(d.divergence - (d.overall_entropy - d.mean_local_entropy));

  if (d.overall_entropy > 0.0) {
    const double h = 1.0 - d.mean_local_entropy / d.overall_entropy;
    d.info_theory = h;
    d.residual_h_vs_d_over_e = std::abs(h - d.divergence / d.overall_entropy);
    d.residual_d_vs_h_times_e = std::abs(d.divergence - h * d.overall_entropy);
  } else {
    d.notes.push_back(
        "H undefined: overall entropy is 0 (H = 1 - 0/0); with two groups H tends to 1 "
        "as the minority population vanishes, while D = 0 and every D_i = 0");
  }
  if (!d.local_not_above_overall) {
    d.notes.push_back(
        "mean local entropy exceeds overall entropy (overlapping subunits): H < 0 and "
        "H = D/E does not apply");
  }
  return d;
}

}  // namespace divindex
