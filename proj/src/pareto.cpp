#include "mofs/pareto.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>

#include "mofs/errors.hpp"

namespace mofs {

namespace {

bool dominates_unchecked(std::span<const Value> u, std::span<const Value> v) noexcept {
  bool strict = false;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i] > v[i]) return false;
    strict |= u[i] < v[i];
  }
  return strict;
}

}  // namespace

bool dominates(std::span<const Value> u, std::span<const Value> v) {
  if (u.size() != v.size()) throw InvalidArgument("objective vectors of different length");
  return dominates_unchecked(u, v);
}

ParetoArchive::ParetoArchive(CriteriaSet criteria) : criteria_(std::move(criteria)) {}

UpdateOutcome ParetoArchive::update(Permutation candidate, ObjectiveVector vector) {
  if (vector.size() != criteria_.size())
    throw InvalidArgument("candidate vector does not match the archive's criteria set");
  UpdateOutcome outcome;
  if (members_.contains(candidate)) {
    outcome.status = UpdateStatus::RejectedDuplicate;
    return outcome;
  }
  for (const auto& e : entries_) {
    if (dominates_unchecked(e.vector, vector)) {
      outcome.status = UpdateStatus::RejectedDominated;
      return outcome;
    }
  }

  auto keep_end = std::stable_partition(entries_.begin(), entries_.end(),
                                        [&](const ArchiveEntry& e) { return !dominates_unchecked(vector, e.vector); });
  for (auto it = keep_end; it != entries_.end(); ++it) {
    members_.erase(it->permutation);
    if (!it->investigated) --unexplored_;
    outcome.removed.push_back(std::move(*it));
  }
  entries_.erase(keep_end, entries_.end());

  members_.insert(candidate);
  entries_.push_back(ArchiveEntry{std::move(candidate), std::move(vector), false});
  ++unexplored_;
  outcome.status = UpdateStatus::Inserted;
  return outcome;
}

std::optional<ArchiveEntry> ParetoArchive::select_unexplored(SplitMix64& rng) const {
  if (unexplored_ == 0) return std::nullopt;
  auto pick = rng.below(unexplored_);
  for (const auto& e : entries_) {
    if (e.investigated) continue;
    if (pick-- == 0) return e;
  }
  return std::nullopt;
}

bool ParetoArchive::mark_investigated(const Permutation& pi) {
  if (!members_.contains(pi)) return false;
  auto it = std::find_if(entries_.begin(), entries_.end(), [&](const ArchiveEntry& e) { return e.permutation == pi; });
  if (!it->investigated) {
    it->investigated = true;
    --unexplored_;
  }
  return true;
}

std::vector<ObjectiveVector> ParetoArchive::distinct_vectors() const {
  std::vector<ObjectiveVector> out;
  out.reserve(entries_.size());
  for (const auto& e : entries_) out.push_back(e.vector);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

void ParetoArchive::write_csv(std::ostream& out) const {
  out << "permutation";
  for (auto tag : criteria_.objectives) out << ',' << to_string(tag);
  out << '\n';
  std::vector<const ArchiveEntry*> rows;
  for (const auto& e : entries_) rows.push_back(&e);
  std::sort(rows.begin(), rows.end(), [](const ArchiveEntry* a, const ArchiveEntry* b) {
    return std::tie(a->vector, a->permutation) < std::tie(b->vector, b->permutation);
  });
  for (const auto* e : rows) {
    out << e->permutation.to_string();
    for (Value v : e->vector) out << ',' << v;
    out << '\n';
  }
}

std::vector<ObjectiveVector> pareto_filter(std::span<const ObjectiveVector> vectors) {
  if (vectors.empty()) return {};
  const std::size_t dim = vectors.front().size();
  for (const auto& v : vectors)
    if (v.size() != dim) throw InvalidArgument("pareto_filter: vectors of different length");

  std::vector<ObjectiveVector> sorted(vectors.begin(), vectors.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  // Lexicographic order: a vector can only be dominated by one that precedes it.
  std::vector<ObjectiveVector> front;
  for (auto& v : sorted) {
    const bool dominated =
        std::any_of(front.begin(), front.end(), [&](const ObjectiveVector& f) { return dominates_unchecked(f, v); });
    if (!dominated) front.push_back(std::move(v));
  }
  return front;
}

bool NondominatedSet::admit(std::span<const Value> vector) {
  for (std::size_t i = 0; i < vectors_.size(); ++i) {
    const auto& f = vectors_[i];
    if (std::equal(f.begin(), f.end(), vector.begin(), vector.end())) return false;
    if (dominates_unchecked(f, vector)) {
      if (i > 0) {
        std::swap(vectors_[i], vectors_[i - 1]);
        std::swap(witnesses_[i], witnesses_[i - 1]);
      }
      return false;
    }
  }
  std::size_t keep = 0;
  for (std::size_t i = 0; i < vectors_.size(); ++i) {
    if (dominates_unchecked(vector, vectors_[i])) continue;
    if (keep != i) {
      vectors_[keep] = std::move(vectors_[i]);
      witnesses_[keep] = std::move(witnesses_[i]);
    }
    ++keep;
  }
  vectors_.resize(keep);
  witnesses_.resize(keep);
  return true;
}

bool NondominatedSet::insert(std::span<const Value> vector, std::span<const int> witness_order) {
  if (!vectors_.empty() && vectors_.front().size() != vector.size())
    throw InvalidArgument("objective vectors of different length");
  if (!admit(vector)) return false;
  vectors_.emplace_back(vector.begin(), vector.end());
  witnesses_.emplace_back(witness_order.begin(), witness_order.end());
  return true;
}

bool NondominatedSet::insert(std::span<const Value> vector, const Permutation& witness) {
  return insert(vector, witness.order());
}

void NondominatedSet::extract_sorted(std::vector<ObjectiveVector>& vectors, std::vector<Permutation>& witnesses) {
  std::vector<std::size_t> idx(vectors_.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return vectors_[a] < vectors_[b]; });
  vectors.clear();
  witnesses.clear();
  for (auto i : idx) {
    vectors.push_back(std::move(vectors_[i]));
    witnesses.emplace_back(std::move(witnesses_[i]));
  }
  vectors_.clear();
  witnesses_.clear();
}

}  // namespace mofs
