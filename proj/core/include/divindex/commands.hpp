#pragma once

// Command runners behind the `divindex` CLI. Each runner reads its inputs,
// writes its report to `out` (or to a file under RunConfig::out_dir) and
// returns the process exit status. Errors are written to `err` as one JSON
// object per line: {"error": <kind>, "message": ..., "source": ...}.

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "divindex/analysis.hpp"
#include "divindex/log_base.hpp"

namespace divindex {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitParse = 2;
inline constexpr int kExitDomain = 3;

enum class OutputFormat { Csv, Json };

struct RunConfig {
  std::vector<std::filesystem::path> inputs;
  LogBase base = LogBase::base2();
  std::optional<std::string> groups;  // subset/merge spec
  // compute: entropy, divergence, information_theory, dissimilarity;
  // decompose: divergence, information_theory. Empty selects all.
  std::vector<std::string> indexes;
  std::optional<std::pair<std::string, std::string>> dissimilarity_pair;
  std::string district_column = "district_id";
  std::optional<double> radius;
  std::optional<std::filesystem::path> weights;
  std::optional<std::filesystem::path> out_dir;
  std::optional<OutputFormat> format;  // per-command default when unset
  bool pretty = false;
  // sweep
  std::vector<double> sweep_overall;
  std::size_t sweep_steps = 101;
  // correlate
  IndexPair pair;
};

int run_compute(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int run_decompose(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int run_sweep(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int run_correlate(const RunConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace divindex
