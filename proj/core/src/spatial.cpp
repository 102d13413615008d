#include "divindex/spatial.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "divindex/error.hpp"

namespace divindex {

WeightMatrix::WeightMatrix(std::vector<std::vector<Entry>> rows) : rows_(std::move(rows)) {
  const std::size_t n = rows_.size();
  for (std::size_t i = 0; i < n; ++i) {
    const auto& row = rows_[i];
    for (std::size_t k = 0; k < row.size(); ++k) {
      if (row[k].col >= n) {
        throw Error(ErrorKind::InvalidInput,
                    "weight column " + std::to_string(row[k].col) + " out of range");
      }
      if (k > 0 && row[k].col <= row[k - 1].col) {
        throw Error(ErrorKind::InvalidInput, "weight row " + std::to_string(i) +
                                                 " has unsorted or repeated columns");
      }
      if (!std::isfinite(row[k].weight) || row[k].weight < 0.0) {
        throw Error(ErrorKind::InvalidInput, "weights must be finite and nonnegative");
      }
    }
  }
}

double WeightMatrix::at(std::size_t i, std::size_t k) const {
  const auto& row = rows_[i];
  auto it = std::lower_bound(row.begin(), row.end(), k,
                             [](const Entry& e, std::size_t col) { return e.col < col; });
  return (it != row.end() && it->col == k) ? it->weight : 0.0;
}

double WeightMatrix::row_sum(std::size_t i) const {
  double acc = 0.0;
  for (const auto& e : rows_[i]) acc += e.weight;
  return acc;
}

std::size_t WeightMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& row : rows_) n += row.size();
  return n;
}

WeightMatrix weights_from_triplets(const UnitTable& table,
                                   std::span<const WeightTriplet> triplets) {
  std::vector<std::vector<WeightMatrix::Entry>> rows(table.size());
  auto lookup = [&](const std::string& id) {
    const auto idx = table.find(id);
    if (!idx) throw Error(ErrorKind::InvalidInput, "weight refers to unknown unit '" + id + "'");
    return *idx;
  };
  for (const auto& t : triplets) {
    rows[lookup(t.row_unit)].push_back({lookup(t.col_unit), t.weight});
  }
  for (std::size_t i = 0; i < rows.size(); ++i) {
    auto& row = rows[i];
    std::sort(row.begin(), row.end(),
              [](const auto& a, const auto& b) { return a.col < b.col; });
    auto dup = std::adjacent_find(row.begin(), row.end(), [](const auto& a, const auto& b) {
      return a.col == b.col;
    });
    if (dup != row.end()) {
      throw Error(ErrorKind::InvalidInput, "weight pair (" + table[i].id + ", " +
                                               table[dup->col].id + ") listed twice");
    }
  }
  return WeightMatrix(std::move(rows));
}

WeightMatrix uniform_kernel(const UnitTable& table, double radius) {
  if (!std::isfinite(radius) || radius < 0.0) {
    throw Error(ErrorKind::InvalidInput, "radius must be finite and nonnegative");
  }
  const std::size_t n = table.size();
  for (const auto& u : table.units()) {
    if (!u.location) {
      throw Error(ErrorKind::MissingCoordinates, "unit '" + u.id + "' has no coordinates");
    }
  }

  // Sweep over units sorted by x; only pairs within the x-window are tested.
  std::vector<std::size_t> by_x(n);
  std::iota(by_x.begin(), by_x.end(), std::size_t{0});
  std::sort(by_x.begin(), by_x.end(), [&](std::size_t a, std::size_t b) {
    return table[a].location->x < table[b].location->x;
  });

  std::vector<std::vector<WeightMatrix::Entry>> rows(n);
  std::size_t lo = 0;
  for (std::size_t a = 0; a < n; ++a) {
    const Point& pa = *table[by_x[a]].location;
    while (table[by_x[lo]].location->x < pa.x - radius) ++lo;
    for (std::size_t b = lo; b < n; ++b) {
      const Point& pb = *table[by_x[b]].location;
      if (pb.x > pa.x + radius) break;
      if (std::hypot(pa.x - pb.x, pa.y - pb.y) <= radius || by_x[a] == by_x[b]) {
        rows[by_x[a]].push_back({by_x[b], 1.0});
      }
    }
  }
  for (auto& row : rows) {
    std::sort(row.begin(), row.end(),
              [](const auto& x, const auto& y) { return x.col < y.col; });
  }
  return WeightMatrix(std::move(rows));
}

UnitTable spatially_weighted_table(const UnitTable& table, const WeightMatrix& w) {
  if (w.size() != table.size()) {
    throw Error(ErrorKind::DimensionMismatch,
                "weight matrix is " + std::to_string(w.size()) + "x" +
                    std::to_string(w.size()) + " but the table has " +
                    std::to_string(table.size()) + " units");
  }
  const GroupDistribution reference = overall_distribution(table);
  const std::size_t m = table.groups().size();

  std::vector<UnitRecord> smoothed;
  smoothed.reserve(table.size());
  for (std::size_t i = 0; i < table.size(); ++i) {
    UnitRecord rec = table[i];
    rec.counts.assign(m, 0.0);
    for (const auto& e : w.row(i)) {
      for (std::size_t g = 0; g < m; ++g) rec.counts[g] += e.weight * table[e.col].counts[g];
    }
    rec.weight = table[i].averaging_weight();
    if (*rec.weight > 0.0 && !(rec.population() > 0.0)) {
      throw Error(ErrorKind::InvalidInput,
                  "unit '" + rec.id + "' is populated but its weight row is empty");
    }
    smoothed.push_back(std::move(rec));
  }
  return UnitTable(table.groups(), std::move(smoothed)).with_reference(reference);
}

}  // namespace divindex
