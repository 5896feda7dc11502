#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mofs/instance.hpp"

namespace mofs {

/// A job sequence. Stored 0-based; printed and parsed 1-based as "2-1-3".
/// Every constructor validates, and the mutating moves below preserve the
/// permutation property, so an object is always a valid permutation.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> order);

  static Permutation identity(std::size_t n);
  static Permutation from_one_based(std::initializer_list<int> jobs);
  static Permutation from_one_based(std::span<const int> jobs);
  static Permutation parse(std::string_view text);

  std::size_t size() const noexcept { return order_.size(); }
  int operator[](std::size_t pos) const noexcept { return order_[pos]; }
  std::span<const int> order() const noexcept { return order_; }
  auto begin() const noexcept { return order_.begin(); }
  auto end() const noexcept { return order_.end(); }

  /// Left-rotates positions [first, last) so that `middle` becomes `first`.
  void rotate(std::size_t first, std::size_t middle, std::size_t last);
  /// Swaps the length-`len` blocks starting at `a` and `b` (must not overlap).
  void swap_blocks(std::size_t a, std::size_t b, std::size_t len);
  /// Reverses positions [first, last).
  void reverse(std::size_t first, std::size_t last);

  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> order_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

enum class Objective : std::uint8_t { Cmax, Csum, Tmax, Tsum, U, Imax, Isum };

std::string_view to_string(Objective objective) noexcept;
Objective parse_objective(std::string_view tag);

/// How idle time of machine i is measured: up to the machine's own last
/// completion (default) or up to the makespan.
enum class IdleHorizon : std::uint8_t { MachineLast, Makespan };

struct CriteriaSet {
  std::string name;
  std::vector<Objective> objectives;
  IdleHorizon idle_horizon = IdleHorizon::MachineLast;

  std::size_t size() const noexcept { return objectives.size(); }
  /// Throws InvalidArgument unless >= 2 objectives without duplicates.
  void validate() const;
  /// Comma-separated tag list, e.g. "CMAX,CSUM".
  std::string tags() const;

  friend bool operator==(const CriteriaSet&, const CriteriaSet&) = default;
};

/// gamma1 ... gamma12 from the studied combinations of criteria.
CriteriaSet builtin_criteria(std::string_view name);
std::vector<std::string> builtin_criteria_names();
/// Accepts a builtin name or a custom comma-separated tag list ("CMAX,U").
CriteriaSet parse_criteria(std::string_view text);

using Value = std::int64_t;
using ObjectiveVector = std::vector<Value>;

std::string to_string(std::span<const Value> vector);

/// Completion times of the semi-active schedule. Indexed by job, not by position.
struct CompletionMatrix {
  std::size_t jobs = 0;
  std::size_t machines = 0;
  std::vector<Time> completion;      // jobs x machines, row-major
  std::vector<Time> job_completion;  // C_j, last machine
  std::vector<Time> machine_last;    // last completion on each machine

  Time at(std::size_t job, std::size_t machine) const { return completion[job * machines + machine]; }
};

CompletionMatrix evaluate_schedule(const Instance& instance, const Permutation& pi);

Value objective(Objective tag, const Instance& instance, const CompletionMatrix& completion,
                IdleHorizon horizon = IdleHorizon::MachineLast);

ObjectiveVector objective_vector(const Instance& instance, const Permutation& pi, const CriteriaSet& criteria);

/// Allocation-free evaluator bound to one instance and criteria set. Computes
/// only the rolling completion front, O(n*m) per call. Not thread-safe; give
/// each thread its own.
class Evaluator {
 public:
  Evaluator(const Instance& instance, CriteriaSet criteria);

  void evaluate(std::span<const int> order, ObjectiveVector& out);
  ObjectiveVector operator()(const Permutation& pi);

  const Instance& instance() const noexcept { return *instance_; }
  const CriteriaSet& criteria() const noexcept { return criteria_; }

 private:
  const Instance* instance_;
  CriteriaSet criteria_;
  std::vector<Time> loads_;
  std::vector<Time> front_;
  bool needs_tardiness_ = false;
  bool needs_idle_ = false;
};

}  // namespace mofs
