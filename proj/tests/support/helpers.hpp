#pragma once

#include <gtest/gtest.h>

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "divindex/error.hpp"
#include "divindex/popcore.hpp"

namespace testing_util {

inline divindex::UnitRecord unit(std::string id, std::vector<double> counts,
                                 std::optional<std::string> district = std::nullopt) {
  divindex::UnitRecord u;
  u.id = std::move(id);
  u.counts = std::move(counts);
  u.district = std::move(district);
  return u;
}

inline divindex::UnitRecord located(std::string id, std::vector<double> counts, double x,
                                    double y) {
  auto u = unit(std::move(id), std::move(counts));
  u.location = divindex::Point{x, y};
  return u;
}

inline divindex::UnitTable two_group(std::vector<std::vector<double>> rows,
                                     std::vector<std::string> names = {"A", "B"}) {
  std::vector<divindex::UnitRecord> units;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    units.push_back(unit("u" + std::to_string(i), std::move(rows[i])));
  }
  return divindex::UnitTable(divindex::GroupSet(std::move(names)), std::move(units));
}

template <class F>
divindex::ErrorKind error_kind_of(F&& fn) {
  try {
    fn();
  } catch (const divindex::Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "expected divindex::Error";
  return divindex::ErrorKind::InvalidInput;
}

}  // namespace testing_util
