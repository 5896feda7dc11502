#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <vector>

namespace mofs {

using Time = std::int64_t;

/// Permutation flow shop instance: `jobs` jobs visit `machines` machines in the
/// same order. Processing times are stored row-major, one row per job.
struct Instance {
  std::size_t jobs = 0;
  std::size_t machines = 0;
  std::vector<Time> processing;
  std::vector<Time> due_dates;

  Time time(std::size_t job, std::size_t machine) const { return processing[job * machines + machine]; }
  Time& time(std::size_t job, std::size_t machine) { return processing[job * machines + machine]; }

  std::span<const Time> row(std::size_t job) const {
    return std::span<const Time>(processing).subspan(job * machines, machines);
  }

  /// Throws InvalidArgument if the shape or sign invariants do not hold.
  void validate() const;

  friend bool operator==(const Instance&, const Instance&) = default;
};

/// Instance builder from nested rows; convenient for hand-written fixtures.
Instance make_instance(const std::vector<std::vector<Time>>& rows, std::vector<Time> due_dates);

struct GeneratorConfig {
  std::size_t jobs = 10;
  std::size_t machines = 10;
  std::uint64_t seed = 0;
  double tau = 0.3;    // tardiness factor
  double range = 0.5;  // due-date range factor
};

/// Processing times drawn uniformly from [1, 99]; due dates left at zero.
/// Draws come from the stream derive_seed(seed, "processing-times"), job-major.
Instance generate_processing_times(const GeneratorConfig& config);

/// Due dates d_j ~ U[floor(P*((1 - tau) - range/2)), floor(P*((1 - tau) + range/2))],
/// both bounds clamped at 0, with P = makespan_lower_bound(instance). Draws come
/// from the stream derive_seed(seed, "due-dates").
std::vector<Time> generate_due_dates(const Instance& instance, const GeneratorConfig& config);

/// Processing times followed by due dates.
Instance generate_instance(const GeneratorConfig& config);

/// max(largest machine load, largest job total work).
Time makespan_lower_bound(const Instance& instance);

/// Text format: "n m", then n rows of m processing times, then one row of n
/// due dates. Errors are ParseError with the offending line number.
Instance read_instance(std::istream& in);
Instance read_instance(const std::filesystem::path& path);
void write_instance(std::ostream& out, const Instance& instance);
void write_instance(const std::filesystem::path& path, const Instance& instance);

}  // namespace mofs
