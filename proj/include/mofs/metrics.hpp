#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string_view>
#include <vector>

#include "mofs/evaluation.hpp"
#include "mofs/oracle.hpp"
#include "mofs/search.hpp"

namespace mofs {

/// Per-objective weights 1 / (max - min) over the reference vectors, or 1
/// where that range is zero.
std::vector<double> range_weights(std::span<const ObjectiveVector> reference);

/// max_k w_k * max(0, a_k - p_k): how far `a` falls short of `p`.
double deviation(std::span<const Value> a, std::span<const Value> p, std::span<const double> weights);

struct MetricReport {
  double d1 = 0.0;  // mean over the reference of the closest approximation deviation
  double d2 = 0.0;  // max over the reference of the same
  std::size_t covered = 0;
  std::size_t reference_size = 0;
};

MetricReport d1_d2(std::span<const ObjectiveVector> approx, std::span<const ObjectiveVector> reference);
MetricReport d1_d2(std::span<const ObjectiveVector> approx, const ReferenceFront& reference);

struct FrequencyRow {
  ObjectiveVector vector;
  std::size_t count = 0;
  double frequency = 0.0;
};

struct FrequencyTable {
  std::size_t runs = 0;
  std::vector<FrequencyRow> rows;  // one per reference vector, reference order
};

/// How often each reference vector appears exactly in the runs' archives.
FrequencyTable identification_frequency(std::span<const RunRecord> records, const ReferenceFront& reference);

/// CSV: "# config_digest=..." then "<tags>,count,frequency".
void write_frequency_csv(std::ostream& out, const FrequencyTable& table, const CriteriaSet& criteria,
                         std::string_view config_digest);

}  // namespace mofs
