#include "divindex/indexes.hpp"

#include <cmath>

#include "divindex/error.hpp"

namespace divindex {
namespace {

template <class F>
LocalIndexVector map_units(const UnitTable& table, LogBase base, F&& per_unit) {
  LocalIndexVector out;
  out.base = base;
  out.unit_ids.reserve(table.size());
  out.values.reserve(table.size());
  const auto locals = local_distributions(table);
  for (std::size_t i = 0; i < table.size(); ++i) {
    out.unit_ids.push_back(table[i].id);
    if (locals[i]) {
      out.values.emplace_back(per_unit(*locals[i], table[i]));
    } else {
      out.values.emplace_back(std::nullopt);
    }
  }
  return out;
}

// sum (tau_i/T) v_i over units with a defined value, in table order.
double weighted_mean(const UnitTable& table, const LocalIndexVector& local) {
  const double total = table.total_population();
  if (!(total > 0.0)) {
    throw Error(ErrorKind::EmptyRegion, "region has zero total population");
  }
  double acc = 0.0;
  for (std::size_t i = 0; i < local.size(); ++i) {
    if (!local.values[i]) continue;
    const double w = table[i].averaging_weight();
    if (w == 0.0) continue;
    acc += w * *local.values[i];
  }
  return acc / total;
}

}  // namespace

IndexValue entropy(const GroupDistribution& p, LogBase base) {
  base.check(p.size());
  double e = 0.0;
  for (double pm : p.values()) {
    if (pm > 0.0) e += pm * -base.log(pm, p.size());
  }
  return {e, base};
}

IndexValue kl_divergence(const GroupDistribution& p, const GroupDistribution& q,
                         LogBase base, std::span<const std::string> labels) {
  if (p.size() != q.size()) {
    throw Error(ErrorKind::DimensionMismatch, "distributions have different group counts");
  }
  base.check(p.size());
  double d = 0.0;
  for (std::size_t m = 0; m < p.size(); ++m) {
    if (p[m] == 0.0) continue;
    if (q[m] == 0.0) {
      const std::string group = m < labels.size() ? "'" + labels[m] + "'"
                                                  : "#" + std::to_string(m);
      throw Error(ErrorKind::SupportViolation,
                  "group " + group + " is present locally but absent from the reference");
    }
    d += p[m] * base.log(p[m] / q[m], p.size());
  }
  // Rounding can leave a tiny negative total for nearly equal distributions.
  return {d < 0.0 ? 0.0 : d, base};
}

LocalIndexVector entropy_local(const UnitTable& table, LogBase base) {
  return map_units(table, base, [base](const GroupDistribution& p, const UnitRecord&) {
    return entropy(p, base).value;
  });
}

IndexValue mean_local_entropy(const UnitTable& table, LogBase base) {
  return {weighted_mean(table, entropy_local(table, base)), base};
}

IndexValue overall_entropy(const UnitTable& table, LogBase base) {
  return entropy(overall_distribution(table), base);
}

LocalIndexVector divergence_local(const UnitTable& table, LogBase base) {
  const GroupDistribution overall = overall_distribution(table);
  const auto& labels = table.groups().names();
  return map_units(table, base, [&](const GroupDistribution& p, const UnitRecord& u) {
    try {
      return kl_divergence(p, overall, base, labels).value;
    } catch (const Error& e) {
      throw Error(e.kind(), "unit '" + u.id + "': " + e.what());
    }
  });
}

IndexValue divergence_overall(const UnitTable& table, LogBase base) {
  return {weighted_mean(table, divergence_local(table, base)), base};
}

LocalIndexVector info_theory_local(const UnitTable& table, LogBase base) {
  const double e = overall_entropy(table, base).value;
  if (!(e > 0.0)) {
    throw Error(ErrorKind::DegenerateRegion,
                "Information Theory Index undefined: overall entropy is 0");
  }
  return map_units(table, base, [&](const GroupDistribution& p, const UnitRecord&) {
    return 1.0 - entropy(p, base).value / e;
  });
}

IndexValue info_theory_overall(const UnitTable& table, LogBase base) {
  const double e = overall_entropy(table, base).value;
  if (!(e > 0.0)) {
    throw Error(ErrorKind::DegenerateRegion,
                "Information Theory Index undefined: overall entropy is 0");
  }
  return {1.0 - mean_local_entropy(table, base).value / e, base};
}

double dissimilarity_two_group(const UnitTable& table, std::string_view group_a,
                               std::string_view group_b) {
  const auto a = table.groups().index_of(group_a);
  const auto b = table.groups().index_of(group_b);
  if (!a || !b) {
    throw Error(ErrorKind::MissingGroup,
                "unknown group '" + std::string(!a ? group_a : group_b) + "'");
  }
  double total_a = 0.0;
  double total_b = 0.0;
  for (const auto& u : table.units()) {
    total_a += u.counts[*a];
    total_b += u.counts[*b];
  }
  if (!(total_a > 0.0) || !(total_b > 0.0)) {
    throw Error(ErrorKind::MissingGroup,
                "group '" + std::string(total_a > 0.0 ? group_b : group_a) +
                    "' has no population in the region");
  }
  double acc = 0.0;
  for (const auto& u : table.units()) {
    acc += std::abs(u.counts[*a] / total_a - u.counts[*b] / total_b);
  }
  return 0.5 * acc;
}

double simpson_interaction(const GroupDistribution& p) {
  double acc = 0.0;
  for (double pm : p.values()) acc += pm * (1.0 - pm);
  return acc;
}

double dissimilarity_multigroup(const UnitTable& table) {
  const GroupDistribution overall = overall_distribution(table);
  const double interaction = simpson_interaction(overall);
  if (!(interaction > 0.0)) {
    throw Error(ErrorKind::DegenerateRegion,
                "Dissimilarity Index undefined: region has a single group");
  }
  const double total = table.total_population();
  const auto locals = local_distributions(table);
  double acc = 0.0;
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (!locals[i]) continue;
    const double w = table[i].averaging_weight();
    double dev = 0.0;
    for (std::size_t m = 0; m < overall.size(); ++m) {
      dev += std::abs((*locals[i])[m] - overall[m]);
    }
    acc += w * dev;
  }
  return acc / (2.0 * total * interaction);
}

IndexValue theil_income(std::span<const IncomeObservation> incomes, LogBase base) {
  double total = 0.0;
  double mass = 0.0;
  for (const auto& obs : incomes) {
    if (!std::isfinite(obs.income) || obs.income < 0.0 || !std::isfinite(obs.weight) ||
        obs.weight < 0.0) {
      throw Error(ErrorKind::InvalidInput, "incomes and weights must be nonnegative");
    }
    total += obs.weight;
    mass += obs.weight * obs.income;
  }
  if (!(total > 0.0) || !(mass > 0.0)) {
    throw Error(ErrorKind::ZeroMean, "Theil index undefined: mean income is 0");
  }
  const double mean = mass / total;
  double acc = 0.0;
  for (const auto& obs : incomes) {
    if (obs.weight == 0.0 || obs.income == 0.0) continue;
    const double ratio = obs.income / mean;
    acc += obs.weight * ratio * base.log(ratio, incomes.size());
  }
  return {acc / total, base};
}

}  // namespace divindex
