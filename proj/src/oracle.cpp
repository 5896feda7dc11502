#include "mofs/oracle.hpp"

#include <algorithm>
#include <exception>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <string>

#include "mofs/errors.hpp"
#include "mofs/pareto.hpp"

namespace mofs {

namespace {

std::uint64_t factorial(std::size_t n) {
  std::uint64_t f = 1;
  for (std::size_t i = 2; i <= n; ++i) f *= i;
  return f;
}

void check_size(const Instance& instance, const CriteriaSet& criteria, std::size_t limit) {
  instance.validate();
  criteria.validate();
  if (instance.jobs > limit)
    throw SizeError("refusing to enumerate " + std::to_string(instance.jobs) + "! permutations (oracle limit is " +
                    std::to_string(limit) + " jobs)");
}

/// Advances `order` to the next lexicographic permutation without touching
/// positions before `from`. Returns the first changed position, or order.size()
/// when the range was already the last permutation.
std::size_t next_lexicographic(std::vector<int>& order, std::size_t from) {
  const std::size_t n = order.size();
  if (n - from < 2) return n;
  std::size_t i = n - 2;
  while (order[i] > order[i + 1]) {
    if (i == from) return n;
    --i;
  }
  std::size_t j = n - 1;
  while (order[j] < order[i]) --j;
  std::swap(order[i], order[j]);
  std::reverse(order.begin() + static_cast<std::ptrdiff_t>(i + 1), order.end());
  return i;
}

/// Per-depth schedule state so that only the changed suffix is re-evaluated.
class PrefixEvaluator {
 public:
  PrefixEvaluator(const Instance& instance, const CriteriaSet& criteria)
      : inst_(instance), criteria_(criteria), n_(instance.jobs), m_(instance.machines),
        front_((n_ + 1) * m_, 0), csum_(n_ + 1, 0), tmax_(n_ + 1, 0), tsum_(n_ + 1, 0), tardy_(n_ + 1, 0),
        loads_(m_, 0) {
    for (std::size_t j = 0; j < n_; ++j)
      for (std::size_t i = 0; i < m_; ++i) loads_[i] += inst_.time(j, i);
  }

  /// Recomputes depths [from, n) for `order`; depth 0 is the empty schedule.
  void extend(std::span<const int> order, std::size_t from) {
    for (std::size_t q = from; q < n_; ++q) {
      const auto job = static_cast<std::size_t>(order[q]);
      const Time* prev = front_.data() + q * m_;
      Time* cur = front_.data() + (q + 1) * m_;
      const Time* t = inst_.processing.data() + job * m_;
      Time ready = 0;
      for (std::size_t i = 0; i < m_; ++i) {
        ready = std::max(prev[i], ready) + t[i];
        cur[i] = ready;
      }
      const Time late = std::max<Time>(ready - inst_.due_dates[job], 0);
      csum_[q + 1] = csum_[q] + ready;
      tmax_[q + 1] = std::max(tmax_[q], late);
      tsum_[q + 1] = tsum_[q] + late;
      tardy_[q + 1] = tardy_[q] + (late > 0 ? 1 : 0);
    }
  }

  void vector(ObjectiveVector& out) const {
    const Time* last = front_.data() + n_ * m_;
    const Time cmax = last[m_ - 1];
    out.resize(criteria_.size());
    for (std::size_t k = 0; k < criteria_.size(); ++k) {
      switch (criteria_.objectives[k]) {
        case Objective::Cmax: out[k] = cmax; break;
        case Objective::Csum: out[k] = csum_[n_]; break;
        case Objective::Tmax: out[k] = tmax_[n_]; break;
        case Objective::Tsum: out[k] = tsum_[n_]; break;
        case Objective::U: out[k] = tardy_[n_]; break;
        case Objective::Imax:
        case Objective::Isum: {
          Time imax = 0, isum = 0;
          for (std::size_t i = 0; i < m_; ++i) {
            const Time end = criteria_.idle_horizon == IdleHorizon::MachineLast ? last[i] : cmax;
            imax = std::max(imax, end - loads_[i]);
            isum += end - loads_[i];
          }
          out[k] = criteria_.objectives[k] == Objective::Imax ? imax : isum;
          break;
        }
      }
    }
  }

 private:
  const Instance& inst_;
  const CriteriaSet& criteria_;
  std::size_t n_, m_;
  std::vector<Time> front_;
  std::vector<Time> csum_, tmax_, tsum_, tardy_;
  std::vector<Time> loads_;
};

struct ChunkResult {
  std::vector<ObjectiveVector> vectors;
  std::vector<Permutation> witnesses;
  std::uint64_t count = 0;
};

ChunkResult enumerate_chunk(const Instance& instance, const CriteriaSet& criteria, std::span<const int> prefix) {
  const std::size_t n = instance.jobs;
  std::vector<int> order(prefix.begin(), prefix.end());
  for (int job = 0; job < static_cast<int>(n); ++job)
    if (std::find(prefix.begin(), prefix.end(), job) == prefix.end()) order.push_back(job);

  PrefixEvaluator eval(instance, criteria);
  NondominatedSet front;
  ChunkResult result;
  ObjectiveVector vector;
  std::size_t changed = 0;
  while (changed < n) {
    eval.extend(order, changed);
    eval.vector(vector);
    front.insert(vector, std::span<const int>(order));
    ++result.count;
    changed = next_lexicographic(order, prefix.size());
  }
  front.extract_sorted(result.vectors, result.witnesses);
  return result;
}

ReferenceFront merge(const CriteriaSet& criteria, std::vector<ChunkResult>& chunks) {
  NondominatedSet merged;
  ReferenceFront front;
  front.criteria = criteria;
  for (auto& chunk : chunks) {
    for (std::size_t i = 0; i < chunk.vectors.size(); ++i) merged.insert(chunk.vectors[i], chunk.witnesses[i]);
    front.permutation_count += chunk.count;
  }
  merged.extract_sorted(front.vectors, front.witnesses);
  return front;
}

}  // namespace

ReferenceFront enumerate_pareto(const Instance& instance, const CriteriaSet& criteria, std::size_t limit) {
  check_size(instance, criteria, limit);
  const int n = static_cast<int>(instance.jobs);

  std::vector<std::vector<int>> prefixes;
  if (n == 1) {
    prefixes.push_back({});
  } else {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (a != b) prefixes.push_back({a, b});
  }

  std::vector<ChunkResult> chunks(prefixes.size());
  std::exception_ptr failure;
  const auto count = static_cast<std::int64_t>(prefixes.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t c = 0; c < count; ++c) {
    try {
      chunks[static_cast<std::size_t>(c)] = enumerate_chunk(instance, criteria, prefixes[static_cast<std::size_t>(c)]);
    } catch (...) {
#pragma omp critical(mofs_oracle_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  ReferenceFront front = merge(criteria, chunks);
  if (front.permutation_count != factorial(instance.jobs)) throw Error("oracle chunks did not cover the permutation space");
  return front;
}

ReferenceFront enumerate_pareto_serial(const Instance& instance, const CriteriaSet& criteria, std::size_t limit) {
  check_size(instance, criteria, limit);
  std::vector<int> order(instance.jobs);
  std::iota(order.begin(), order.end(), 0);

  Evaluator evaluate(instance, criteria);
  NondominatedSet front;
  ObjectiveVector vector;
  ReferenceFront result;
  result.criteria = criteria;
  do {
    evaluate.evaluate(order, vector);
    front.insert(vector, std::span<const int>(order));
    ++result.permutation_count;
  } while (std::next_permutation(order.begin(), order.end()));
  front.extract_sorted(result.vectors, result.witnesses);
  return result;
}

namespace {

void write_metadata(std::ostream& out, const ReferenceFront& front, std::string_view digest) {
  out << "# config_digest=" << digest << '\n';
  out << "# criteria=" << front.criteria.name << '\n';
  out << "# idle_horizon=" << (front.criteria.idle_horizon == IdleHorizon::MachineLast ? "machine" : "makespan") << '\n';
  out << "# permutation_count=" << front.permutation_count << '\n';
}

}  // namespace

void write_front_csv(std::ostream& out, const ReferenceFront& front, std::string_view config_digest) {
  write_metadata(out, front, config_digest);
  out << front.criteria.tags() << '\n';
  for (const auto& v : front.vectors) {
    for (std::size_t k = 0; k < v.size(); ++k) out << (k ? "," : "") << v[k];
    out << '\n';
  }
}

void write_witnesses_csv(std::ostream& out, const ReferenceFront& front, std::string_view config_digest) {
  write_metadata(out, front, config_digest);
  out << "permutation," << front.criteria.tags() << '\n';
  for (std::size_t i = 0; i < front.vectors.size(); ++i) {
    out << front.witnesses[i].to_string();
    for (Value x : front.vectors[i]) out << ',' << x;
    out << '\n';
  }
}

ReferenceFront read_front_csv(std::istream& in) {
  ReferenceFront front;
  std::string line;
  std::size_t line_no = 0;
  std::string name;
  bool have_header = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line.front() == '#') {
      const auto eq = line.find('=');
      if (eq == std::string::npos) continue;
      const auto key = line.substr(2, eq - 2);
      const auto value = line.substr(eq + 1);
      if (key == "criteria") name = value;
      if (key == "idle_horizon" && value == "makespan") front.criteria.idle_horizon = IdleHorizon::Makespan;
      if (key == "permutation_count") front.permutation_count = std::stoull(value);
      continue;
    }
    if (!have_header) {
      try {
        const auto horizon = front.criteria.idle_horizon;
        front.criteria = parse_criteria(line);
        front.criteria.idle_horizon = horizon;
      } catch (const Error& e) {
        throw ParseError(line_no, e.what());
      }
      have_header = true;
      continue;
    }
    ObjectiveVector v;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
      try {
        std::size_t used = 0;
        v.push_back(std::stoll(cell, &used));
        if (used != cell.size()) throw std::invalid_argument(cell);
      } catch (const std::exception&) {
        throw ParseError(line_no, "expected an integer, got '" + cell + "'");
      }
    }
    if (v.size() != front.criteria.size()) throw ParseError(line_no, "row width does not match the criteria header");
    front.vectors.push_back(std::move(v));
  }
  if (!have_header) throw ParseError(line_no, "front file has no header row");
  if (!name.empty()) front.criteria.name = name;
  return front;
}

}  // namespace mofs
