#include "mofs/metrics.hpp"

#include <algorithm>
#include <limits>
#include <ostream>
#include <set>

#include "mofs/errors.hpp"

namespace mofs {

std::vector<double> range_weights(std::span<const ObjectiveVector> reference) {
  if (reference.empty()) return {};
  const std::size_t dim = reference.front().size();
  std::vector<double> weights(dim, 1.0);
  for (std::size_t k = 0; k < dim; ++k) {
    Value lo = std::numeric_limits<Value>::max();
    Value hi = std::numeric_limits<Value>::min();
    for (const auto& p : reference) {
      lo = std::min(lo, p[k]);
      hi = std::max(hi, p[k]);
    }
    if (hi > lo) weights[k] = 1.0 / static_cast<double>(hi - lo);
  }
  return weights;
}

double deviation(std::span<const Value> a, std::span<const Value> p, std::span<const double> weights) {
  if (a.size() != p.size() || a.size() != weights.size())
    throw InvalidArgument("deviation: vectors and weights must have equal length");
  double worst = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    const Value surplus = a[k] - p[k];
    if (surplus > 0) worst = std::max(worst, weights[k] * static_cast<double>(surplus));
  }
  return worst;
}

MetricReport d1_d2(std::span<const ObjectiveVector> approx, std::span<const ObjectiveVector> reference) {
  if (approx.empty()) throw InvalidArgument("d1_d2: empty approximation set");
  if (reference.empty()) throw InvalidArgument("d1_d2: empty reference front");
  const auto weights = range_weights(reference);

  MetricReport report;
  report.reference_size = reference.size();
  double sum = 0.0;
  for (const auto& p : reference) {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& a : approx) best = std::min(best, deviation(a, p, weights));
    sum += best;
    report.d2 = std::max(report.d2, best);
    if (std::find(approx.begin(), approx.end(), p) != approx.end()) ++report.covered;
  }
  report.d1 = sum / static_cast<double>(reference.size());
  return report;
}

MetricReport d1_d2(std::span<const ObjectiveVector> approx, const ReferenceFront& reference) {
  return d1_d2(approx, std::span<const ObjectiveVector>(reference.vectors));
}

FrequencyTable identification_frequency(std::span<const RunRecord> records, const ReferenceFront& reference) {
  FrequencyTable table;
  table.runs = records.size();
  for (const auto& r : records) {
    if (r.criteria.objectives != reference.criteria.objectives || r.criteria.idle_horizon != reference.criteria.idle_horizon)
      throw InvalidArgument("identification_frequency: run criteria '" + r.criteria.name +
                            "' differ from the reference criteria '" + reference.criteria.name + "'");
  }
  for (const auto& p : reference.vectors) {
    FrequencyRow row{p, 0, 0.0};
    for (const auto& r : records)
      if (std::find(r.vectors.begin(), r.vectors.end(), p) != r.vectors.end()) ++row.count;
    row.frequency = table.runs ? static_cast<double>(row.count) / static_cast<double>(table.runs) : 0.0;
    table.rows.push_back(std::move(row));
  }
  return table;
}

void write_frequency_csv(std::ostream& out, const FrequencyTable& table, const CriteriaSet& criteria,
                         std::string_view config_digest) {
  out << "# config_digest=" << config_digest << '\n';
  out << "# runs=" << table.runs << '\n';
  out << criteria.tags() << ",count,frequency\n";
  for (const auto& row : table.rows) {
    for (Value v : row.vector) out << v << ',';
    out << row.count << ',' << row.frequency << '\n';
  }
}

}  // namespace mofs
