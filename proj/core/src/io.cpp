#include "divindex/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <unordered_set>

#include "divindex/error.hpp"

namespace divindex {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

std::string at_line(const std::string& source, std::size_t line) {
  return source + ":" + std::to_string(line);
}

double parse_real(std::string_view text, const std::string& what, const std::string& where) {
  text = trim(text);
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size() ||
      !std::isfinite(value)) {
    throw Error(ErrorKind::ParseError,
                "invalid " + what + " '" + std::string(text) + "' at " + where, where);
  }
  return value;
}

// Reads non-empty lines, tracking 1-based line numbers.
class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  bool next(std::string& line) {
    while (std::getline(in_, line)) {
      ++number_;
      if (number_ == 1 && line.starts_with("\xEF\xBB\xBF")) line.erase(0, 3);
      if (!trim(line).empty()) return true;
    }
    return false;
  }
  std::size_t number() const { return number_; }

 private:
  std::istream& in_;
  std::size_t number_ = 0;
};

std::vector<std::string> split_or_throw(const std::string& line, const std::string& where) {
  try {
    return split_csv_line(line);
  } catch (const Error& e) {
    throw Error(ErrorKind::ParseError, std::string(e.what()) + " at " + where, where);
  }
}

std::string quote_field(const std::string& field) {
  if (field.find_first_of(",\"\n\r") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string shortest(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ec == std::errc() ? ptr : buf);
}

}  // namespace

std::vector<std::string> split_csv_line(std::string_view line) {
  std::vector<std::string> fields;
  std::string current;
  bool quoted = false;
  bool was_quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          current += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        current += c;
      }
    } else if (c == '"') {
      quoted = true;
      was_quoted = true;
    } else if (c == ',') {
      fields.push_back(was_quoted ? current : std::string(trim(current)));
      current.clear();
      was_quoted = false;
    } else {
      current += c;
    }
  }
  if (quoted) throw Error(ErrorKind::ParseError, "unterminated quoted field");
  fields.push_back(was_quoted ? current : std::string(trim(current)));
  return fields;
}

RegionFile parse_region_csv(const std::filesystem::path& path, const CsvOptions& options) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorKind::ParseError, "cannot open '" + path.string() + "'", path.string());
  }
  return parse_region_csv(in, path.string(), options);
}

RegionFile parse_region_csv(std::istream& in, const std::string& source,
                            const CsvOptions& options) {
  LineReader reader(in);
  std::string line;
  if (!reader.next(line)) {
    throw Error(ErrorKind::ParseError, source + " is empty", source);
  }
  const auto header = split_or_throw(line, at_line(source, reader.number()));

  std::optional<std::size_t> district_col, x_col, y_col;
  std::vector<std::size_t> group_cols;
  std::vector<std::string> group_names;
  for (std::size_t c = 1; c < header.size(); ++c) {
    if (header[c] == options.district_column) {
      district_col = c;
    } else if (header[c] == options.x_column) {
      x_col = c;
    } else if (header[c] == options.y_column) {
      y_col = c;
    } else {
      group_cols.push_back(c);
      group_names.push_back(header[c]);
    }
  }
  const std::string header_where = at_line(source, reader.number());
  if (x_col.has_value() != y_col.has_value()) {
    throw Error(ErrorKind::ParseError,
                "header has only one of the coordinate columns at " + header_where,
                header_where);
  }
  if (group_cols.empty()) {
    throw Error(ErrorKind::ParseError, "header has no group columns at " + header_where,
                header_where);
  }
  GroupSet groups;
  try {
    groups = GroupSet(group_names);
  } catch (const Error& e) {
    throw Error(ErrorKind::ParseError, std::string(e.what()) + " at " + header_where,
                header_where);
  }

  std::vector<UnitRecord> units;
  std::unordered_set<std::string> seen;
  std::size_t with_district = 0;
  std::optional<std::string> first_blank_district;
  while (reader.next(line)) {
    const std::string where = at_line(source, reader.number());
    const auto fields = split_or_throw(line, where);
    if (fields.size() != header.size()) {
      throw Error(ErrorKind::ParseError,
                  "expected " + std::to_string(header.size()) + " fields, found " +
                      std::to_string(fields.size()) + " at " + where,
                  where);
    }
    UnitRecord rec;
    rec.id = fields[0];
    if (rec.id.empty()) {
      throw Error(ErrorKind::ParseError, "empty unit id at " + where, where);
    }
    if (!seen.insert(rec.id).second) {
      throw Error(ErrorKind::DuplicateUnitId,
                  "duplicate unit id '" + rec.id + "' at " + where, where);
    }
    if (district_col) {
      if (fields[*district_col].empty()) {
        if (!first_blank_district) first_blank_district = where;
      } else {
        rec.district = fields[*district_col];
        ++with_district;
      }
    }
    if (x_col) {
      rec.location = Point{parse_real(fields[*x_col], "x coordinate", where),
                           parse_real(fields[*y_col], "y coordinate", where)};
    }
    rec.counts.reserve(group_cols.size());
    for (std::size_t g = 0; g < group_cols.size(); ++g) {
      const double c = parse_real(fields[group_cols[g]], "count for '" + group_names[g] + "'",
                                  where);
      if (c < 0.0) {
        throw Error(ErrorKind::NegativeCount,
                    "negative count " + std::string(trim(fields[group_cols[g]])) +
                        " for '" + group_names[g] + "' at " + where,
                    where);
      }
      rec.counts.push_back(c);
    }
    units.push_back(std::move(rec));
  }

  if (with_district > 0 && first_blank_district) {
    throw Error(ErrorKind::ParseError,
                "missing district label at " + *first_blank_district, *first_blank_district);
  }

  RegionFile file;
  file.path = source;
  file.has_coordinates = x_col.has_value();
  file.table = UnitTable(std::move(groups), std::move(units));
  if (with_district > 0) file.hierarchy = Hierarchy::from_table(file.table);
  return file;
}

void write_region_csv(std::ostream& out, const UnitTable& table, const CsvOptions& options) {
  const bool districts = table.has_districts();
  const bool coords = table.has_coordinates();
  out << "unit_id";
  if (districts) out << ',' << quote_field(options.district_column);
  if (coords) out << ',' << quote_field(options.x_column) << ',' << quote_field(options.y_column);
  for (const auto& g : table.groups().names()) out << ',' << quote_field(g);
  out << '\n';
  for (const auto& u : table.units()) {
    out << quote_field(u.id);
    if (districts) out << ',' << quote_field(u.district.value_or(""));
    if (coords) out << ',' << shortest(u.location->x) << ',' << shortest(u.location->y);
    for (double c : u.counts) out << ',' << shortest(c);
    out << '\n';
  }
}

std::vector<WeightTriplet> parse_weight_triplets(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorKind::ParseError, "cannot open '" + path.string() + "'", path.string());
  }
  return parse_weight_triplets(in, path.string());
}

std::vector<WeightTriplet> parse_weight_triplets(std::istream& in, const std::string& source) {
  LineReader reader(in);
  std::string line;
  if (!reader.next(line)) {
    throw Error(ErrorKind::ParseError, source + " is empty", source);
  }
  const std::string header_where = at_line(source, reader.number());
  if (split_or_throw(line, header_where).size() != 3) {
    throw Error(ErrorKind::ParseError,
                "weight header must be row_unit_id,col_unit_id,weight at " + header_where,
                header_where);
  }
  std::vector<WeightTriplet> out;
  while (reader.next(line)) {
    const std::string where = at_line(source, reader.number());
    const auto fields = split_or_throw(line, where);
    if (fields.size() != 3) {
      throw Error(ErrorKind::ParseError, "expected 3 fields at " + where, where);
    }
    const double w = parse_real(fields[2], "weight", where);
    if (w < 0.0) {
      throw Error(ErrorKind::ParseError, "negative weight at " + where, where);
    }
    out.push_back({fields[0], fields[1], w});
  }
  return out;
}

GroupSpec parse_group_spec(std::string_view text) {
  GroupSpec spec;
  for (const auto& raw : split_csv_line(text)) {
    const std::string_view entry = trim(raw);
    if (entry.empty()) throw Error(ErrorKind::InvalidInput, "empty entry in group spec");
    GroupSpec::Entry e;
    const auto eq = entry.find('=');
    std::string_view members = entry;
    if (eq != std::string_view::npos) {
      e.name = std::string(trim(entry.substr(0, eq)));
      members = entry.substr(eq + 1);
      if (e.name.empty()) {
        throw Error(ErrorKind::InvalidInput, "merged group without a name in group spec");
      }
    }
    std::size_t start = 0;
    while (start <= members.size()) {
      const auto plus = members.find('+', start);
      const auto part = trim(members.substr(start, plus - start));
      if (part.empty()) throw Error(ErrorKind::InvalidInput, "empty member in group spec");
      e.members.emplace_back(part);
      if (plus == std::string_view::npos) break;
      start = plus + 1;
    }
    if (e.name.empty()) {
      if (e.members.size() != 1) {
        throw Error(ErrorKind::InvalidInput, "merged groups need a name (name=a+b)");
      }
      e.name = e.members.front();
    }
    spec.entries.push_back(std::move(e));
  }
  return spec;
}

UnitTable apply_group_spec(const UnitTable& table, const GroupSpec& spec) {
  std::vector<std::vector<std::size_t>> sources;
  std::vector<std::string> names;
  std::unordered_set<std::size_t> used;
  for (const auto& e : spec.entries) {
    std::vector<std::size_t> cols;
    for (const auto& member : e.members) {
      const auto idx = table.groups().index_of(member);
      if (!idx) throw Error(ErrorKind::InvalidInput, "group spec names unknown column '" + member + "'");
      if (!used.insert(*idx).second) {
        throw Error(ErrorKind::InvalidInput, "column '" + member + "' used twice in group spec");
      }
      cols.push_back(*idx);
    }
    sources.push_back(std::move(cols));
    names.push_back(e.name);
  }
  std::vector<UnitRecord> units;
  units.reserve(table.size());
  for (const auto& u : table.units()) {
    UnitRecord rec = u;
    rec.counts.assign(sources.size(), 0.0);
    for (std::size_t g = 0; g < sources.size(); ++g) {
      for (std::size_t c : sources[g]) rec.counts[g] += u.counts[c];
    }
    units.push_back(std::move(rec));
  }
  return UnitTable(GroupSet(std::move(names)), std::move(units));
}

}  // namespace divindex
