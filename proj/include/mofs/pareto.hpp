#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <unordered_set>
#include <vector>

#include "mofs/evaluation.hpp"
#include "mofs/rng.hpp"

namespace mofs {

/// True iff u <= v componentwise and u != v. Throws InvalidArgument on length mismatch.
bool dominates(std::span<const Value> u, std::span<const Value> v);

struct ArchiveEntry {
  Permutation permutation;
  ObjectiveVector vector;
  bool investigated = false;
};

enum class UpdateStatus { Inserted, RejectedDominated, RejectedDuplicate };

struct UpdateOutcome {
  UpdateStatus status = UpdateStatus::RejectedDominated;
  std::vector<ArchiveEntry> removed;

  bool inserted() const noexcept { return status == UpdateStatus::Inserted; }
};

/// Unbounded nondominated archive keyed by permutation. Entries with equal
/// vectors but different permutations coexist, since neither dominates.
class ParetoArchive {
 public:
  explicit ParetoArchive(CriteriaSet criteria);

  UpdateOutcome update(Permutation candidate, ObjectiveVector vector);

  /// Uniformly random entry whose neighbourhood is not yet investigated.
  std::optional<ArchiveEntry> select_unexplored(SplitMix64& rng) const;

  bool contains(const Permutation& pi) const { return members_.contains(pi); }
  /// Marks the entry holding `pi`; false if no such entry exists.
  bool mark_investigated(const Permutation& pi);

  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }
  std::size_t unexplored() const noexcept { return unexplored_; }
  const std::vector<ArchiveEntry>& entries() const noexcept { return entries_; }
  const CriteriaSet& criteria() const noexcept { return criteria_; }

  /// Distinct objective vectors in lexicographic order.
  std::vector<ObjectiveVector> distinct_vectors() const;

  /// CSV snapshot: header "permutation,<tags...>", one row per entry.
  void write_csv(std::ostream& out) const;

 private:
  CriteriaSet criteria_;
  std::vector<ArchiveEntry> entries_;
  std::unordered_set<Permutation, PermutationHash> members_;
  std::size_t unexplored_ = 0;
};

/// Distinct nondominated vectors of the input, in lexicographic order.
std::vector<ObjectiveVector> pareto_filter(std::span<const ObjectiveVector> vectors);

/// Front of distinct vectors with one witness each; the first witness offered
/// for a vector is kept. Dominance checks move the dominating entry one step
/// toward the front, which keeps strong entries early for streamed input.
class NondominatedSet {
 public:
  /// Returns true if `vector` entered the set.
  bool insert(std::span<const Value> vector, const Permutation& witness);
  bool insert(std::span<const Value> vector, std::span<const int> witness_order);

  std::size_t size() const noexcept { return vectors_.size(); }
  /// Moves the content out, sorted lexicographically by vector.
  void extract_sorted(std::vector<ObjectiveVector>& vectors, std::vector<Permutation>& witnesses);

 private:
  bool admit(std::span<const Value> vector);

  std::vector<ObjectiveVector> vectors_;
  std::vector<std::vector<int>> witnesses_;
};

}  // namespace mofs
