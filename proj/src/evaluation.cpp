#include "mofs/evaluation.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <numeric>

#include "mofs/errors.hpp"
#include "mofs/rng.hpp"

namespace mofs {

namespace {

void check_permutation(std::span<const int> order) {
  std::vector<char> seen(order.size(), 0);
  for (int job : order) {
    if (job < 0 || static_cast<std::size_t>(job) >= order.size() || seen[static_cast<std::size_t>(job)])
      throw InvalidArgument("not a permutation: every job index must appear exactly once");
    seen[static_cast<std::size_t>(job)] = 1;
  }
}

struct NamedCriteria {
  std::string_view name;
  std::initializer_list<Objective> objectives;
};

using enum Objective;
const std::array<NamedCriteria, 12> kBuiltin = {{
    {"gamma1", {Cmax, Tmax}},
    {"gamma2", {Cmax, Csum}},
    {"gamma3", {Cmax, Tsum}},
    {"gamma4", {Tmax, Tsum}},
    {"gamma5", {Csum, Tmax}},
    {"gamma6", {Csum, Tsum}},
    {"gamma7", {Cmax, Tmax, Tsum}},
    {"gamma8", {Cmax, Csum, Tmax}},
    {"gamma9", {Cmax, Csum, Tsum}},
    {"gamma10", {Csum, Tmax, Tsum}},
    {"gamma11", {Cmax, Csum, Tmax, Tsum}},
    {"gamma12", {Cmax, Csum, Tmax, Tsum, Isum, U}},
}};

}  // namespace

Permutation::Permutation(std::vector<int> order) : order_(std::move(order)) { check_permutation(order_); }

Permutation Permutation::identity(std::size_t n) {
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  return Permutation(std::move(order));
}

Permutation Permutation::from_one_based(std::span<const int> jobs) {
  std::vector<int> order(jobs.begin(), jobs.end());
  for (auto& j : order) --j;
  return Permutation(std::move(order));
}

Permutation Permutation::from_one_based(std::initializer_list<int> jobs) {
  return from_one_based(std::span<const int>(jobs.begin(), jobs.size()));
}

Permutation Permutation::parse(std::string_view text) {
  std::vector<int> jobs;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto dash = std::min(text.find('-', pos), text.size());
    int job = 0;
    auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + dash, job);
    if (ec != std::errc() || ptr != text.data() + dash) throw InvalidArgument("malformed permutation '" + std::string(text) + "'");
    jobs.push_back(job);
    pos = dash + 1;
  }
  return from_one_based(jobs);
}

void Permutation::rotate(std::size_t first, std::size_t middle, std::size_t last) {
  std::rotate(order_.begin() + static_cast<std::ptrdiff_t>(first), order_.begin() + static_cast<std::ptrdiff_t>(middle),
              order_.begin() + static_cast<std::ptrdiff_t>(last));
}

void Permutation::swap_blocks(std::size_t a, std::size_t b, std::size_t len) {
  std::swap_ranges(order_.begin() + static_cast<std::ptrdiff_t>(a), order_.begin() + static_cast<std::ptrdiff_t>(a + len),
                   order_.begin() + static_cast<std::ptrdiff_t>(b));
}

void Permutation::reverse(std::size_t first, std::size_t last) {
  std::reverse(order_.begin() + static_cast<std::ptrdiff_t>(first), order_.begin() + static_cast<std::ptrdiff_t>(last));
}

std::string Permutation::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < order_.size(); ++i) {
    if (i) out += '-';
    out += std::to_string(order_[i] + 1);
  }
  return out;
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  std::uint64_t h = 0x243F6A8885A308D3ULL;
  for (int job : p) h = mix64(h ^ static_cast<std::uint64_t>(job)) + SplitMix64::kIncrement;
  return static_cast<std::size_t>(h);
}

std::string_view to_string(Objective objective) noexcept {
  switch (objective) {
    case Cmax: return "CMAX";
    case Csum: return "CSUM";
    case Tmax: return "TMAX";
    case Tsum: return "TSUM";
    case U: return "U";
    case Imax: return "IMAX";
    case Isum: return "ISUM";
  }
  return "?";
}

Objective parse_objective(std::string_view tag) {
  for (auto o : {Cmax, Csum, Tmax, Tsum, U, Imax, Isum})
    if (to_string(o) == tag) return o;
  throw LookupError("unknown objective '" + std::string(tag) + "' (valid: CMAX, CSUM, TMAX, TSUM, U, IMAX, ISUM)");
}

void CriteriaSet::validate() const {
  if (objectives.size() < 2) throw InvalidArgument("criteria set '" + name + "' needs at least two objectives");
  for (std::size_t i = 0; i < objectives.size(); ++i)
    for (std::size_t k = i + 1; k < objectives.size(); ++k)
      if (objectives[i] == objectives[k]) throw InvalidArgument("criteria set '" + name + "' repeats an objective");
}

std::string CriteriaSet::tags() const {
  std::string out;
  for (std::size_t i = 0; i < objectives.size(); ++i) {
    if (i) out += ',';
    out += to_string(objectives[i]);
  }
  return out;
}

CriteriaSet builtin_criteria(std::string_view name) {
  for (const auto& entry : kBuiltin)
    if (entry.name == name) return CriteriaSet{std::string(entry.name), entry.objectives};
  std::string valid;
  for (const auto& entry : kBuiltin) valid += (valid.empty() ? "" : ", ") + std::string(entry.name);
  throw LookupError("unknown criteria set '" + std::string(name) + "' (valid: " + valid + ")");
}

std::vector<std::string> builtin_criteria_names() {
  std::vector<std::string> names;
  for (const auto& entry : kBuiltin) names.emplace_back(entry.name);
  return names;
}

CriteriaSet parse_criteria(std::string_view text) {
  if (text.starts_with("gamma")) return builtin_criteria(text);
  CriteriaSet set;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto comma = std::min(text.find(',', pos), text.size());
    set.objectives.push_back(parse_objective(text.substr(pos, comma - pos)));
    pos = comma + 1;
  }
  set.name = set.tags();
  set.validate();
  return set;
}

std::string to_string(std::span<const Value> vector) {
  std::string out = "(";
  for (std::size_t i = 0; i < vector.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(vector[i]);
  }
  return out + ")";
}

CompletionMatrix evaluate_schedule(const Instance& instance, const Permutation& pi) {
  if (pi.size() != instance.jobs) throw InvalidArgument("permutation length does not match the job count");
  const std::size_t m = instance.machines;
  CompletionMatrix c;
  c.jobs = instance.jobs;
  c.machines = m;
  c.completion.assign(instance.jobs * m, 0);
  c.job_completion.assign(instance.jobs, 0);
  c.machine_last.assign(m, 0);

  const Time* prev = nullptr;  // row of the previous job in sequence
  for (int job : pi) {
    const auto j = static_cast<std::size_t>(job);
    Time* row = c.completion.data() + j * m;
    for (std::size_t i = 0; i < m; ++i) {
      const Time machine_free = prev ? prev[i] : 0;
      const Time job_ready = i ? row[i - 1] : 0;
      row[i] = std::max(machine_free, job_ready) + instance.time(j, i);
    }
    c.job_completion[j] = row[m - 1];
    prev = row;
  }
  if (prev) std::copy(prev, prev + m, c.machine_last.begin());
  return c;
}

Value objective(Objective tag, const Instance& instance, const CompletionMatrix& c, IdleHorizon horizon) {
  auto tardiness = [&](std::size_t j) { return std::max<Time>(c.job_completion[j] - instance.due_dates[j], 0); };
  auto idle = [&](std::size_t i) {
    Time load = 0;
    for (std::size_t j = 0; j < instance.jobs; ++j) load += instance.time(j, i);
    const Time end = horizon == IdleHorizon::MachineLast ? c.machine_last[i] : c.machine_last[c.machines - 1];
    return end - load;
  };

  Value result = 0;
  switch (tag) {
    case Cmax:
      for (Time cj : c.job_completion) result = std::max(result, cj);
      break;
    case Csum:
      for (Time cj : c.job_completion) result += cj;
      break;
    case Tmax:
      for (std::size_t j = 0; j < c.jobs; ++j) result = std::max(result, tardiness(j));
      break;
    case Tsum:
      for (std::size_t j = 0; j < c.jobs; ++j) result += tardiness(j);
      break;
    case U:
      for (std::size_t j = 0; j < c.jobs; ++j) result += tardiness(j) > 0 ? 1 : 0;
      break;
    case Imax:
      for (std::size_t i = 0; i < c.machines; ++i) result = std::max(result, idle(i));
      break;
    case Isum:
      for (std::size_t i = 0; i < c.machines; ++i) result += idle(i);
      break;
  }
  return result;
}

ObjectiveVector objective_vector(const Instance& instance, const Permutation& pi, const CriteriaSet& criteria) {
  const CompletionMatrix c = evaluate_schedule(instance, pi);
  ObjectiveVector out;
  out.reserve(criteria.size());
  for (auto tag : criteria.objectives) out.push_back(objective(tag, instance, c, criteria.idle_horizon));
  return out;
}

Evaluator::Evaluator(const Instance& instance, CriteriaSet criteria)
    : instance_(&instance), criteria_(std::move(criteria)), loads_(instance.machines, 0), front_(instance.machines, 0) {
  instance.validate();
  for (std::size_t j = 0; j < instance.jobs; ++j)
    for (std::size_t i = 0; i < instance.machines; ++i) loads_[i] += instance.time(j, i);
  for (auto tag : criteria_.objectives) {
    needs_tardiness_ |= tag == Tmax || tag == Tsum || tag == U;
    needs_idle_ |= tag == Imax || tag == Isum;
  }
}

void Evaluator::evaluate(std::span<const int> order, ObjectiveVector& out) {
  const Instance& inst = *instance_;
  if (order.size() != inst.jobs) throw InvalidArgument("permutation length does not match the job count");
  const std::size_t m = inst.machines;
  std::fill(front_.begin(), front_.end(), 0);

  Time csum = 0, tmax = 0, tsum = 0, tardy = 0;
  for (int job : order) {
    const auto j = static_cast<std::size_t>(job);
    const Time* t = inst.processing.data() + j * m;
    Time ready = 0;
    for (std::size_t i = 0; i < m; ++i) {
      ready = std::max(front_[i], ready) + t[i];
      front_[i] = ready;
    }
    csum += ready;
    if (needs_tardiness_) {
      const Time late = ready - inst.due_dates[j];
      if (late > 0) {
        tmax = std::max(tmax, late);
        tsum += late;
        ++tardy;
      }
    }
  }

  const Time cmax = front_[m - 1];
  Time imax = 0, isum = 0;
  if (needs_idle_) {
    for (std::size_t i = 0; i < m; ++i) {
      const Time end = criteria_.idle_horizon == IdleHorizon::MachineLast ? front_[i] : cmax;
      const Time idle = end - loads_[i];
      imax = std::max(imax, idle);
      isum += idle;
    }
  }

  out.resize(criteria_.size());
  for (std::size_t k = 0; k < criteria_.size(); ++k) {
    switch (criteria_.objectives[k]) {
      case Cmax: out[k] = cmax; break;
      case Csum: out[k] = csum; break;
      case Tmax: out[k] = tmax; break;
      case Tsum: out[k] = tsum; break;
      case U: out[k] = tardy; break;
      case Imax: out[k] = imax; break;
      case Isum: out[k] = isum; break;
    }
  }
}

ObjectiveVector Evaluator::operator()(const Permutation& pi) {
  ObjectiveVector out;
  evaluate(pi.order(), out);
  return out;
}

}  // namespace mofs
