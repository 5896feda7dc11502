#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string_view>
#include <vector>

#include "mofs/evaluation.hpp"
#include "mofs/instance.hpp"

namespace mofs {

inline constexpr std::size_t kDefaultOracleLimit = 10;

/// The true Pareto front of an instance: distinct nondominated vectors in
/// lexicographic order, each with the lexicographically first permutation
/// achieving it.
struct ReferenceFront {
  CriteriaSet criteria;
  std::vector<ObjectiveVector> vectors;
  std::vector<Permutation> witnesses;
  std::uint64_t permutation_count = 0;
};

/// Exhaustive enumeration with the OpenMP kernel: the permutation space is
/// split by its two-job prefix, each chunk is walked in lexicographic order
/// with incremental prefix evaluation, and chunk fronts are merged in prefix
/// order. Throws SizeError when n > limit.
ReferenceFront enumerate_pareto(const Instance& instance, const CriteriaSet& criteria,
                                std::size_t limit = kDefaultOracleLimit);

/// Serial reference: std::next_permutation over all n! orders, full
/// evaluation of each. Same result as enumerate_pareto.
ReferenceFront enumerate_pareto_serial(const Instance& instance, const CriteriaSet& criteria,
                                       std::size_t limit = kDefaultOracleLimit);

/// Front CSV: "# key=value" metadata lines, a header of objective tags, then
/// one vector per row.
void write_front_csv(std::ostream& out, const ReferenceFront& front, std::string_view config_digest);
/// Witness CSV: metadata lines, "permutation,<tags>", one row per vector.
void write_witnesses_csv(std::ostream& out, const ReferenceFront& front, std::string_view config_digest);
/// Reads a front CSV (witnesses are left empty).
ReferenceFront read_front_csv(std::istream& in);

}  // namespace mofs
