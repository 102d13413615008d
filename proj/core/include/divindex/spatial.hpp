#pragma once

// Ego-centric (spatially weighted) neighborhoods. A weight matrix turns each
// unit's counts into a proximity-weighted local population; the smoothed
// table then feeds the ordinary index functions.

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "divindex/popcore.hpp"

namespace divindex {

/// Sparse N x N nonnegative proximity weights, rows in unit order.
class WeightMatrix {
 public:
  struct Entry {
    std::size_t col = 0;
    double weight = 0.0;
  };

  WeightMatrix() = default;
  /// Rows must have ascending, distinct, in-range column indexes and finite
  /// nonnegative weights; throws InvalidInput otherwise.
  explicit WeightMatrix(std::vector<std::vector<Entry>> rows);

  std::size_t size() const { return rows_.size(); }
  std::span<const Entry> row(std::size_t i) const { return rows_[i]; }
  double at(std::size_t i, std::size_t k) const;
  double row_sum(std::size_t i) const;
  std::size_t nonzeros() const;

 private:
  std::vector<std::vector<Entry>> rows_;
};

struct WeightTriplet {
  std::string row_unit;
  std::string col_unit;
  double weight = 0.0;
};

/// Builds a matrix from (row unit, column unit, weight) triplets keyed by
/// the table's unit ids. Unknown ids or repeated pairs throw InvalidInput.
WeightMatrix weights_from_triplets(const UnitTable& table,
                                   std::span<const WeightTriplet> triplets);

/// w_ik = 1 when the planar Euclidean distance between i and k is <= radius,
/// else 0; every unit is its own neighbor. Throws MissingCoordinates.
WeightMatrix uniform_kernel(const UnitTable& table, double radius);

/// Unit i's counts become sum_k w_ik counts_k. Each unit keeps its own
/// unsmoothed population as the averaging weight and the original overall
/// composition is kept as the reference. Throws DimensionMismatch when the
/// matrix size differs from the table, and InvalidInput when a populated unit
/// ends up with no smoothed population.
UnitTable spatially_weighted_table(const UnitTable& table, const WeightMatrix& w);

}  // namespace divindex
