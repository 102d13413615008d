#include "divindex/report.hpp"

#include <cstdio>
#include <cstdlib>
#include <sstream>

#include "json.hpp"

namespace divindex {
namespace {

using Json = nlohmann::ordered_json;

Json number(double v) { return round_significant(v); }

Json number(const std::optional<double>& v) {
  return v ? Json(round_significant(*v)) : Json(nullptr);
}

std::string cell(const std::optional<double>& v) { return v ? format_number(*v) : ""; }

std::string fixed2(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  // Avoid "-0.00" in presentation tables.
  return std::string(buf) == "-0.00" ? "0.00" : buf;
}

std::string fixed2(const std::optional<double>& v) { return v ? fixed2(*v) : "n/a"; }

std::string csv_text(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

Json base_json(LogBase base) { return Json{{"log", base.label()}, {"unit", base.unit()}}; }

Json local_json(const LocalIndexVector& local) {
  Json arr = Json::array();
  for (std::size_t i = 0; i < local.size(); ++i) {
    arr.push_back(Json{{"unit_id", local.unit_ids[i]}, {"value", number(local.values[i])}});
  }
  return arr;
}

Json decomposition_body(const DecompositionReport& r) {
  Json districts = Json::array();
  for (const auto& d : r.per_district) {
    districts.push_back(Json{
        {"district_id", d.district_id},
        {"population_share", number(d.population_share)},
        {"raw_between_score", number(d.raw_between)},
        {"weighted_between_contribution", number(d.weighted_between)},
        {"raw_within_score", number(d.raw_within)},
        {"weighted_within_contribution", number(d.weighted_within)},
        {"between_share", number(r.share(d.weighted_between))},
        {"within_share", number(r.share(d.weighted_within))},
    });
  }
  return Json{{"index_kind", to_string(r.index_kind)},
              {"base", base_json(r.base)},
              {"total", number(r.total)},
              {"between", number(r.between)},
              {"within_total", number(r.within_total)},
              {"between_share", number(r.between_share())},
              {"within_share", number(r.within_share())},
              {"additivity_residual", number(r.between + r.within_total - r.total)},
              {"per_district", districts},
              {"warnings", r.warnings}};
}

}  // namespace

std::string format_number(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return buf;
}

double round_significant(double value) {
  return std::strtod(format_number(value).c_str(), nullptr);
}

std::string compute_json(const ComputeReport& report) {
  Json indexes = Json::array();
  for (const auto& ix : report.indexes) {
    Json entry{{"index", ix.index}, {"overall", number(ix.overall)}};
    if (ix.local) entry["local"] = local_json(*ix.local);
    if (!ix.note.empty()) entry["note"] = ix.note;
    indexes.push_back(std::move(entry));
  }
  Json doc{{"command", "compute"},
           {"source", report.source},
           {"base", base_json(report.base)},
           {"groups", report.groups.names()},
           {"n_units", report.n_units},
           {"total_population", number(report.total_population)},
           {"spatial", report.spatial}};
  if (report.radius) doc["radius"] = number(*report.radius);
  doc["indexes"] = std::move(indexes);
  if (report.equivalence) {
    const auto& e = *report.equivalence;
    doc["equivalence"] = Json{
        {"overall_entropy", number(e.overall_entropy)},
        {"mean_local_entropy", number(e.mean_local_entropy)},
        {"divergence", number(e.divergence)},
        {"information_theory", number(e.info_theory)},
        {"entropy_nonnegative", e.entropy_nonnegative},
        {"local_not_above_overall", e.local_not_above_overall},
        {"conditions_hold", e.conditions_hold},
        {"residual_h_vs_d_over_e", number(e.residual_h_vs_d_over_e)},
        {"residual_d_vs_h_times_e", number(e.residual_d_vs_h_times_e)},
        {"residual_d_vs_entropy_gap", number(e.residual_d_vs_entropy_gap)},
        {"notes", e.notes}};
  }
  doc["notes"] = report.notes;
  return doc.dump(2) + "\n";
}

std::string compute_csv(const ComputeReport& report) {
  std::ostringstream out;
  out << "scope,unit_id,index,value\n";
  for (const auto& ix : report.indexes) {
    out << "overall,," << ix.index << ',' << cell(ix.overall) << '\n';
  }
  for (const auto& ix : report.indexes) {
    if (!ix.local) continue;
    for (std::size_t i = 0; i < ix.local->size(); ++i) {
      out << "local," << csv_text(ix.local->unit_ids[i]) << ',' << ix.index << ','
          << cell(ix.local->values[i]) << '\n';
    }
  }
  return out.str();
}

std::string compute_pretty(const ComputeReport& report) {
  std::ostringstream out;
  out << report.source << " (" << report.n_units << " units, log base "
      << report.base.label() << (report.spatial ? ", spatially weighted" : "") << ")\n";
  for (const auto& ix : report.indexes) {
    char line[128];
    std::snprintf(line, sizeof line, "  %-22s %8s\n", ix.index.c_str(),
                  fixed2(ix.overall).c_str());
    out << line;
  }
  if (report.equivalence) {
    char line[128];
    std::snprintf(line, sizeof line, "  %-22s %8s\n", "mean_local_entropy",
                  fixed2(report.equivalence->mean_local_entropy).c_str());
    out << line;
  }
  for (const auto& n : report.notes) out << "  note: " << n << '\n';
  return out.str();
}

std::string decomposition_json(const std::string& source, const GroupSet& groups,
                               std::span<const DecompositionReport> reports) {
  Json arr = Json::array();
  for (const auto& r : reports) arr.push_back(decomposition_body(r));
  Json doc{{"command", "decompose"},
           {"source", source},
           {"groups", groups.names()},
           {"decompositions", arr}};
  return doc.dump(2) + "\n";
}

std::string decomposition_csv(std::span<const DecompositionReport> reports) {
  std::ostringstream out;
  out << "index,component,district_id,population_share,raw_between_score,"
         "weighted_between_contribution,raw_within_score,weighted_within_contribution,"
         "value,share\n";
  for (const auto& r : reports) {
    const auto kind = to_string(r.index_kind);
    out << kind << ",total,,,,,,," << format_number(r.total) << ",1\n";
    out << kind << ",between,,,,,,," << format_number(r.between) << ','
        << format_number(r.between_share()) << '\n';
    out << kind << ",within,,,,,,," << format_number(r.within_total) << ','
        << format_number(r.within_share()) << '\n';
    for (const auto& d : r.per_district) {
      out << kind << ",district," << csv_text(d.district_id) << ','
          << format_number(d.population_share) << ',' << format_number(d.raw_between)
          << ',' << format_number(d.weighted_between) << ',' << format_number(d.raw_within)
          << ',' << format_number(d.weighted_within) << ','
          << format_number(d.weighted_between + d.weighted_within) << ','
          << format_number(r.share(d.weighted_between + d.weighted_within)) << '\n';
    }
  }
  return out.str();
}

std::string decomposition_pretty(std::span<const DecompositionReport> reports) {
  std::ostringstream out;
  char line[160];
  std::snprintf(line, sizeof line, "%-24s", "(share of overall)");
  out << line;
  for (const auto& r : reports) {
    std::snprintf(line, sizeof line, " %20s", std::string(to_string(r.index_kind)).c_str());
    out << line;
  }
  out << '\n';
  auto row = [&](const std::string& label, auto&& value_of) {
    std::snprintf(line, sizeof line, "%-24s", label.c_str());
    out << line;
    for (const auto& r : reports) {
      std::snprintf(line, sizeof line, " %20s", fixed2(value_of(r)).c_str());
      out << line;
    }
    out << '\n';
  };
  row("Overall", [](const DecompositionReport&) { return 1.0; });
  row("Between", [](const DecompositionReport& r) { return r.between_share(); });
  if (!reports.empty()) {
    for (std::size_t j = 0; j < reports.front().per_district.size(); ++j) {
      row("    " + reports.front().per_district[j].district_id,
          [j](const DecompositionReport& r) {
            return j < r.per_district.size() ? r.share(r.per_district[j].weighted_between)
                                             : 0.0;
          });
    }
  }
  row("Within", [](const DecompositionReport& r) { return r.within_share(); });
  if (!reports.empty()) {
    for (std::size_t j = 0; j < reports.front().per_district.size(); ++j) {
      row("    " + reports.front().per_district[j].district_id,
          [j](const DecompositionReport& r) {
            return j < r.per_district.size() ? r.share(r.per_district[j].weighted_within)
                                             : 0.0;
          });
    }
  }
  return out.str();
}

std::string sweep_csv(const SweepCurve& curve) {
  std::ostringstream out;
  out << "local_p1,divergence,information_theory\n";
  for (const auto& s : curve.samples) {
    out << format_number(s.local_share) << ',' << format_number(s.divergence) << ','
        << format_number(s.info_theory) << '\n';
  }
  return out.str();
}

std::string sweep_json(const SweepCurve& curve) {
  Json samples = Json::array();
  for (const auto& s : curve.samples) {
    samples.push_back(Json{{"local_p1", number(s.local_share)},
                           {"divergence", number(s.divergence)},
                           {"information_theory", number(s.info_theory)}});
  }
  std::vector<double> overall(curve.overall.values().begin(), curve.overall.values().end());
  Json doc{{"command", "sweep"},
           {"base", base_json(curve.base)},
           {"overall", overall},
           {"samples", samples}};
  return doc.dump(2) + "\n";
}

std::string correlation_json(const CorrelationReport& report) {
  Json regions = Json::array();
  for (const auto& r : report.per_region) {
    Json entry{{"region_id", r.region_id},
               {"n_units", r.n_units},
               {"pearson_r_local", number(r.pearson)},
               {"spearman_rho_local", number(r.spearman)},
               {"overall_first", number(r.overall_first)},
               {"overall_second", number(r.overall_second)}};
    entry["flag"] = r.flag.empty() ? Json(nullptr) : Json(r.flag);
    regions.push_back(std::move(entry));
  }
  Json doc{{"command", "correlate"},
           {"base", base_json(report.base)},
           {"pair", {to_string(report.pair.first), to_string(report.pair.second)}},
           {"per_region", regions},
           {"mean_local_pearson", number(report.mean_local_pearson)},
           {"mean_local_spearman", number(report.mean_local_spearman)},
           {"cross_region_pearson", number(report.cross_region_pearson)},
           {"cross_region_spearman", number(report.cross_region_spearman)},
           {"flags", report.flags}};
  return doc.dump(2) + "\n";
}

std::string correlation_csv(const CorrelationReport& report) {
  std::ostringstream out;
  out << "scope,region_id,n_units,pearson,spearman,overall_first,overall_second,flag\n";
  for (const auto& r : report.per_region) {
    out << "region," << csv_text(r.region_id) << ',' << r.n_units << ',' << cell(r.pearson)
        << ',' << cell(r.spearman) << ',' << cell(r.overall_first) << ','
        << cell(r.overall_second) << ',' << csv_text(r.flag) << '\n';
  }
  out << "mean_local,,," << cell(report.mean_local_pearson) << ','
      << cell(report.mean_local_spearman) << ",,,\n";
  out << "cross_region,," << report.per_region.size() << ','
      << cell(report.cross_region_pearson) << ',' << cell(report.cross_region_spearman)
      << ",,,\n";
  return out.str();
}

std::string correlation_pretty(const CorrelationReport& report) {
  std::ostringstream out;
  out << "correlation of " << to_string(report.pair.first) << " with "
      << to_string(report.pair.second) << '\n';
  char line[160];
  for (const auto& r : report.per_region) {
    std::snprintf(line, sizeof line, "  %-24s n=%-6zu r=%6s  %s\n", r.region_id.c_str(),
                  r.n_units, fixed2(r.pearson).c_str(), r.flag.c_str());
    out << line;
  }
  out << "  average tract-level r: " << fixed2(report.mean_local_pearson) << '\n';
  out << "  city-level r:          " << fixed2(report.cross_region_pearson) << '\n';
  return out.str();
}

}  // namespace divindex
