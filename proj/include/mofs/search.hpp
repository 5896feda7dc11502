#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mofs/evaluation.hpp"
#include "mofs/instance.hpp"
#include "mofs/neighbourhoods.hpp"
#include "mofs/pareto.hpp"

namespace mofs {

enum class SearchMode { Molsd, Movns };

struct SearchConfig {
  CriteriaSet criteria;
  std::vector<OperatorSpec> operators;
  SearchMode mode = SearchMode::Molsd;
  std::uint64_t seed = 0;
  std::optional<Permutation> initial;
  /// Abort with an Error after this many selections; 0 disables the watchdog.
  std::size_t max_selections = 0;
  /// Lets MOVNS run with a single operator (test configurations only).
  bool allow_single_operator_movns = false;

  /// Throws ConfigError for an inconsistent mode/operator list or criteria set,
  /// and for operators inadmissible on n-job permutations.
  void validate(std::size_t n) const;
};

/// Human-readable configuration label: "1-FSH", "MOVNS/3", "MOVNS/9" or
/// "MOVNS{1-EX,2-EX}" for other sets.
std::string configuration_label(SearchMode mode, std::span<const OperatorSpec> operators);

/// Parses "1-FSH" (MOLSD) or "movns:1-BSH,1-FSH,1-EX" / "movns:all9" / "movns:all3".
struct SearchConfiguration {
  SearchMode mode = SearchMode::Molsd;
  std::vector<OperatorSpec> operators;

  std::string label() const { return configuration_label(mode, operators); }
};
SearchConfiguration parse_configuration(std::string_view text);

struct SearchCounters {
  std::uint64_t evaluated = 0;
  std::uint64_t neighbourhoods = 0;
  std::uint64_t neighbourhood_sizes = 0;  // sum of generated neighbourhood sizes
  std::uint64_t selections = 0;
  std::uint64_t insertions = 0;
  std::uint64_t removals = 0;

  friend bool operator==(const SearchCounters&, const SearchCounters&) = default;
};

struct RunRecord {
  std::string instance_id;
  std::size_t instance_index = 0;
  std::size_t run_index = 0;
  std::string configuration;
  CriteriaSet criteria;
  std::uint64_t seed = 0;
  SearchCounters counters;
  std::int64_t elapsed_us = 0;
  /// Final archive; empty when the record was read back from JSON.
  std::vector<ArchiveEntry> archive;
  /// Distinct archive vectors in lexicographic order, with one witness each.
  std::vector<ObjectiveVector> vectors;
  std::vector<Permutation> witnesses;
  /// How often each configured operator was drawn (MOVNS) or used (MOLSD).
  std::vector<std::uint64_t> operator_draws;
};

/// Called once per evaluated solution, including the initial one.
using EvaluationObserver = std::function<void(const Permutation&, const ObjectiveVector&)>;

/// Multi objective local search descent with the single configured operator.
RunRecord molsd(const Instance& instance, const SearchConfig& config, const EvaluationObserver& observer = {});
/// Variable neighbourhood variant: one operator drawn uniformly per selection.
RunRecord movns(const Instance& instance, const SearchConfig& config, const EvaluationObserver& observer = {});
/// Dispatches on config.mode.
RunRecord run_search(const Instance& instance, const SearchConfig& config, const EvaluationObserver& observer = {});

enum class Execution { Serial, Parallel };

/// Seed of run `run` on instance `instance_index` under master seed `master`.
std::uint64_t run_seed(std::uint64_t master, std::size_t instance_index, std::size_t run);

/// Runs every (instance, run) pair with seed run_seed(config.seed, i, r).
/// Records are ordered by instance, then run, whatever the execution mode.
std::vector<RunRecord> run_batch(std::span<const Instance> instances, const SearchConfig& config,
                                 std::size_t runs_per_instance, Execution execution = Execution::Parallel);

/// One JSON object per line. `config_digest` is copied into every line.
void write_record_jsonl(std::ostream& out, const RunRecord& record, std::string_view config_digest);
std::vector<RunRecord> read_records_jsonl(std::istream& in);

}  // namespace mofs
