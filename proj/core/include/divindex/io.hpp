#pragma once

// Region CSV files, weight-triplet files and group subset/merge specs.
//
// Region CSV layout (UTF-8, one header row):
//
//   unit_id[,district_id][,x,y],<group 1>,...,<group M>
//
// The first column is always the unit id; the district and coordinate
// columns are recognised by name and may appear anywhere after it. Every
// other column is a group count (nonnegative real).

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "divindex/popcore.hpp"
#include "divindex/spatial.hpp"

namespace divindex {

struct CsvOptions {
  std::string district_column = "district_id";
  std::string x_column = "x";
  std::string y_column = "y";
};

struct RegionFile {
  std::string path;
  UnitTable table;
  std::optional<Hierarchy> hierarchy;  // present when the district column is filled
  bool has_coordinates = false;
};

/// Throws ParseError (with "path:line" provenance), NegativeCount or
/// DuplicateUnitId.
RegionFile parse_region_csv(const std::filesystem::path& path, const CsvOptions& options = {});
RegionFile parse_region_csv(std::istream& in, const std::string& source,
                            const CsvOptions& options = {});

/// Writes a table in the region CSV layout; counts use shortest round-trip
/// formatting so parsing the output reproduces the table exactly.
void write_region_csv(std::ostream& out, const UnitTable& table,
                      const CsvOptions& options = {});

/// Weight files: header "row_unit_id,col_unit_id,weight", one triplet per row.
std::vector<WeightTriplet> parse_weight_triplets(const std::filesystem::path& path);
std::vector<WeightTriplet> parse_weight_triplets(std::istream& in, const std::string& source);

/// Group subset/merge specification, e.g. "White,Black" (subset) or
/// "Minority=Black+Hispanic,White" (merge). Output groups follow entry order.
struct GroupSpec {
  struct Entry {
    std::string name;
    std::vector<std::string> members;
  };
  std::vector<Entry> entries;
};

/// Throws InvalidInput for malformed specs.
GroupSpec parse_group_spec(std::string_view text);

/// Re-expresses a table over the spec's groups. Members must name existing
/// columns and no column may be used twice (InvalidInput otherwise).
UnitTable apply_group_spec(const UnitTable& table, const GroupSpec& spec);

/// Splits one CSV line into fields (double-quoted fields with "" escapes).
std::vector<std::string> split_csv_line(std::string_view line);

}  // namespace divindex
