#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mofs/evaluation.hpp"
#include "mofs/oracle.hpp"
#include "mofs/stats.hpp"

namespace mofs {

/// Everything one reproducible experiment needs. Defaults are the desk-scale
/// protocol: 20 instances of 10 jobs x 10 machines, gamma11, the three unit
/// operators plus MOVNS/3, 30 runs each.
struct ExperimentConfig {
  std::uint64_t seed = 1;
  std::size_t instances = 20;
  std::size_t jobs = 10;
  std::size_t machines = 10;
  double tau = 0.3;
  double range = 0.5;
  std::vector<std::string> criteria = {"gamma11"};
  std::vector<std::string> configurations = {"1-BSH", "1-FSH", "1-EX", "movns:1-BSH,1-FSH,1-EX"};
  std::size_t runs = 30;
  double alpha = 0.01;
  TTestKind test = TTestKind::Welch;
  IdleHorizon idle_horizon = IdleHorizon::MachineLast;
  std::size_t oracle_limit = kDefaultOracleLimit;
  std::filesystem::path out = "results";
  /// OpenMP worker threads; 0 keeps the runtime default.
  std::size_t threads = 0;

  /// Throws ConfigError / LookupError for values outside their domain.
  void validate() const;
  std::vector<CriteriaSet> criteria_sets() const;
};

/// 16 hex digits of FNV-1a over the canonical key=value list relevant to `stage`
/// ("generate", "enumerate", "solve", "report").
std::string config_digest(const ExperimentConfig& config, std::string_view stage);

/// File-name-safe form of a configuration label ("MOVNS/3" -> "MOVNS3").
std::string file_token(std::string_view label);

/// Writes out/instances/inst_NNNN.txt and manifest.json; returns the instance paths.
std::vector<std::filesystem::path> cmd_generate(const ExperimentConfig& config);

/// Writes out/fronts/<stem>.<criteria>.csv and .witnesses.csv for each file.
std::vector<std::filesystem::path> cmd_enumerate(const ExperimentConfig& config,
                                                 std::span<const std::filesystem::path> instance_files);

/// Writes out/runs/<stem>.<criteria>.<config>.jsonl. Instance files are sorted
/// by name; run r of the i-th file uses run_seed(seed, i, r).
std::vector<std::filesystem::path> cmd_solve(const ExperimentConfig& config,
                                             std::span<const std::filesystem::path> instance_files);

/// Reads out/runs and out/fronts, writes out/report/{metrics.csv,
/// summary.csv, significance_d1.{csv,txt}, significance_d2.{csv,txt},
/// frequency/*.csv}. Returns the written files.
std::vector<std::filesystem::path> cmd_report(const ExperimentConfig& config);

/// generate -> enumerate -> solve -> report.
void run_experiment(const ExperimentConfig& config);

/// Sorted *.txt instance files of a directory.
std::vector<std::filesystem::path> list_instance_files(const std::filesystem::path& dir);

}  // namespace mofs
