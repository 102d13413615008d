#include "divindex/commands.hpp"

#include <fstream>
#include <future>
#include <ostream>

#include "divindex/decomp.hpp"
#include "divindex/error.hpp"
#include "divindex/indexes.hpp"
#include "divindex/io.hpp"
#include "divindex/report.hpp"
#include "divindex/spatial.hpp"
#include "json.hpp"

namespace divindex {
namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct LoadedRegion {
  std::string source;
  UnitTable table;
  std::optional<Hierarchy> hierarchy;
  bool spatial = false;
  std::vector<std::string> notes;
};

LoadedRegion load_region(const RunConfig& cfg, const std::filesystem::path& path) {
  CsvOptions options;
  options.district_column = cfg.district_column;
  RegionFile file = parse_region_csv(path, options);

  LoadedRegion region;
  region.source = file.path;
  region.hierarchy = std::move(file.hierarchy);
  region.table = std::move(file.table);
  try {
    if (cfg.groups) {
      region.table = apply_group_spec(region.table, parse_group_spec(*cfg.groups));
    }
    if (cfg.weights) {
      const auto triplets = parse_weight_triplets(*cfg.weights);
      region.table =
          spatially_weighted_table(region.table, weights_from_triplets(region.table, triplets));
      region.spatial = true;
    } else if (cfg.radius) {
      region.table = spatially_weighted_table(region.table,
                                              uniform_kernel(region.table, *cfg.radius));
      region.spatial = true;
    }
  } catch (const Error& e) {
    if (!e.source().empty()) throw;
    throw e.with_source(region.source);
  }

  std::size_t empty_units = 0;
  for (const auto& u : region.table.units()) {
    if (!(u.population() > 0.0)) ++empty_units;
  }
  if (empty_units > 0) {
    region.notes.push_back(std::to_string(empty_units) +
                           " unit(s) with zero population: local values are null and "
                           "they carry zero weight");
  }
  return region;
}

void emit(const RunConfig& cfg, const std::string& name, OutputFormat format,
          const std::string& content, const std::string& pretty, std::ostream& out) {
  if (cfg.pretty) out << pretty;
  if (cfg.out_dir) {
    std::filesystem::create_directories(*cfg.out_dir);
    const auto path =
        *cfg.out_dir / (name + (format == OutputFormat::Json ? ".json" : ".csv"));
    std::ofstream file(path, std::ios::binary);
    if (!file) {
      throw Error(ErrorKind::InvalidInput, "cannot write '" + path.string() + "'",
                  path.string());
    }
    file << content;
  } else if (!cfg.pretty) {
    out << content;
  }
}

void report_error(std::ostream& err, std::string_view kind, const std::string& message,
                  const std::string& source) {
  nlohmann::ordered_json j{{"error", kind}, {"message", message}};
  j["source"] = source.empty() ? nlohmann::ordered_json(nullptr)
                               : nlohmann::ordered_json(source);
  err << j.dump() << '\n';
}

template <class F>
int guarded(std::ostream& err, F&& body) {
  try {
    return body();
  } catch (const UsageError& e) {
    report_error(err, "UsageError", e.what(), {});
    return kExitUsage;
  } catch (const Error& e) {
    report_error(err, to_string(e.kind()), e.what(), e.source());
    return is_input_error(e.kind()) ? kExitParse : kExitDomain;
  } catch (const std::filesystem::filesystem_error& e) {
    report_error(err, "IOError", e.what(), e.path1().string());
    return kExitDomain;
  }
}

const std::filesystem::path& single_input(const RunConfig& cfg, const char* command) {
  if (cfg.inputs.size() != 1) {
    throw UsageError(std::string(command) + " takes exactly one region file");
  }
  return cfg.inputs.front();
}

// Runs `fn` and attaches the region's path to any error without provenance.
template <class F>
auto with_source(const std::string& source, F&& fn) {
  try {
    return fn();
  } catch (const Error& e) {
    if (!e.source().empty()) throw;
    throw e.with_source(source);
  }
}

IndexResult compute_index(const std::string& name, const UnitTable& table, LogBase base) {
  IndexResult r;
  r.index = name;
  try {
    if (name == "entropy") {
      r.overall = overall_entropy(table, base).value;
      r.local = entropy_local(table, base);
    } else if (name == "divergence") {
      r.overall = divergence_overall(table, base).value;
      r.local = divergence_local(table, base);
    } else if (name == "information_theory") {
      r.overall = info_theory_overall(table, base).value;
      r.local = info_theory_local(table, base);
    } else if (name == "dissimilarity") {
      r.overall = dissimilarity_multigroup(table);
      r.local = local_dissimilarity(table);
    } else {
      throw UsageError("unknown index '" + name + "'");
    }
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::DegenerateRegion) throw;
    r.overall.reset();
    r.local.reset();
    r.note = e.what();
  }
  return r;
}

std::string canonical_index(const std::string& name) {
  if (name == "information-theory" || name == "H" || name == "info_theory") {
    return "information_theory";
  }
  if (name == "D") return "divergence";
  if (name == "E") return "entropy";
  if (name == "DI") return "dissimilarity";
  return name;
}

}  // namespace

int run_compute(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto& input = single_input(cfg, "compute");
    const LoadedRegion region = load_region(cfg, input);

    std::vector<std::string> selected;
    for (const auto& n : cfg.indexes) selected.push_back(canonical_index(n));
    if (selected.empty()) {
      selected = {"entropy", "divergence", "information_theory", "dissimilarity"};
    }

    ComputeReport report;
    report.source = region.source;
    report.base = cfg.base;
    report.groups = region.table.groups();
    report.n_units = region.table.size();
    report.spatial = region.spatial;
    if (region.spatial && cfg.radius && !cfg.weights) report.radius = cfg.radius;
    report.notes = region.notes;

    with_source(region.source, [&] {
      report.total_population = region.table.total_population();
      for (const auto& name : selected) {
        report.indexes.push_back(compute_index(name, region.table, cfg.base));
      }
      if (cfg.dissimilarity_pair) {
        IndexResult r;
        r.index = "dissimilarity_two_group";
        r.overall = dissimilarity_two_group(region.table, cfg.dissimilarity_pair->first,
                                            cfg.dissimilarity_pair->second);
        report.indexes.push_back(std::move(r));
      }
      report.equivalence = equivalence_diagnostics(region.table, cfg.base);
      return 0;
    });

    const auto format = cfg.format.value_or(OutputFormat::Json);
    emit(cfg, "compute", format,
         format == OutputFormat::Json ? compute_json(report) : compute_csv(report),
         compute_pretty(report), out);
    return kExitOk;
  });
}

int run_decompose(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto& input = single_input(cfg, "decompose");
    const LoadedRegion region = load_region(cfg, input);
    if (!region.hierarchy) {
      throw Error(ErrorKind::UnassignedUnit,
                  "no district labels: column '" + cfg.district_column + "' is missing or blank",
                  region.source);
    }

    std::vector<std::string> selected;
    for (const auto& n : cfg.indexes) selected.push_back(canonical_index(n));
    if (selected.empty()) selected = {"divergence", "information_theory"};

    std::vector<DecompositionReport> reports;
    with_source(region.source, [&] {
      for (const auto& name : selected) {
        if (name == "divergence") {
          reports.push_back(decompose_divergence(region.table, *region.hierarchy, cfg.base));
        } else if (name == "information_theory") {
          reports.push_back(decompose_info_theory(region.table, *region.hierarchy, cfg.base));
        } else {
          throw UsageError("cannot decompose index '" + name + "'");
        }
      }
      return 0;
    });

    const auto format = cfg.format.value_or(OutputFormat::Json);
    emit(cfg, "decompose", format,
         format == OutputFormat::Json
             ? decomposition_json(region.source, region.table.groups(), reports)
             : decomposition_csv(reports),
         decomposition_pretty(reports), out);
    return kExitOk;
  });
}

int run_sweep(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (cfg.sweep_overall.empty()) throw UsageError("sweep needs --overall p1,p2");
    const auto overall = GroupDistribution::from_proportions(cfg.sweep_overall);
    const SweepCurve curve = sweep_local_indexes(overall, cfg.sweep_steps, cfg.base);
    const auto format = cfg.format.value_or(OutputFormat::Csv);
    const std::string content =
        format == OutputFormat::Json ? sweep_json(curve) : sweep_csv(curve);
    emit(cfg, "sweep", format, content, sweep_csv(curve), out);
    return kExitOk;
  });
}

int run_correlate(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (cfg.inputs.empty()) throw UsageError("correlate needs at least one region file");

    std::vector<std::future<LoadedRegion>> pending;
    pending.reserve(cfg.inputs.size());
    for (const auto& path : cfg.inputs) {
      pending.push_back(std::async(std::launch::async, [&cfg, path] {
        return load_region(cfg, path);
      }));
    }
    std::vector<NamedRegion> regions;
    regions.reserve(pending.size());
    for (std::size_t i = 0; i < pending.size(); ++i) {
      LoadedRegion loaded = pending[i].get();
      regions.push_back({cfg.inputs[i].stem().string(), std::move(loaded.table)});
    }

    const CorrelationReport report = correlate_regions(regions, cfg.pair, cfg.base);
    const auto format = cfg.format.value_or(OutputFormat::Json);
    emit(cfg, "correlate", format,
         format == OutputFormat::Json ? correlation_json(report) : correlation_csv(report),
         correlation_pretty(report), out);
    return kExitOk;
  });
}

}  // namespace divindex
