#include "mofs/search.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <tuple>
#include <exception>
#include <istream>
#include <ostream>

#include <json.hpp>

#include "mofs/errors.hpp"
#include "mofs/rng.hpp"

namespace mofs {

void SearchConfig::validate(std::size_t n) const {
  try {
    criteria.validate();
  } catch (const InvalidArgument& e) {
    throw ConfigError(e.what());
  }
  if (operators.empty()) throw ConfigError("search needs at least one operator");
  if (mode == SearchMode::Molsd && operators.size() != 1) throw ConfigError("MOLSD takes exactly one operator");
  if (mode == SearchMode::Movns && operators.size() < 2 && !allow_single_operator_movns)
    throw ConfigError("MOVNS needs at least two operators");
  for (const auto& op : operators)
    if (!admissible(op, n)) throw ConfigError("operator " + to_string(op) + " is inadmissible for n = " + std::to_string(n));
  if (initial && initial->size() != n) throw ConfigError("initial permutation length does not match the job count");
}

std::string configuration_label(SearchMode mode, std::span<const OperatorSpec> operators) {
  if (mode == SearchMode::Molsd && operators.size() == 1) return to_string(operators.front());
  const auto ops = std::vector<OperatorSpec>(operators.begin(), operators.end());
  if (ops == unit_operators()) return "MOVNS/3";
  if (ops == all_nine_operators()) return "MOVNS/9";
  std::string label = "MOVNS{";
  for (std::size_t i = 0; i < ops.size(); ++i) label += (i ? "," : "") + to_string(ops[i]);
  return label + "}";
}

SearchConfiguration parse_configuration(std::string_view text) {
  constexpr std::string_view prefix = "movns:";
  if (!text.starts_with(prefix)) return {SearchMode::Molsd, {parse_operator(text)}};
  const auto list = text.substr(prefix.size());
  if (list == "all9") return {SearchMode::Movns, all_nine_operators()};
  if (list == "all3") return {SearchMode::Movns, unit_operators()};
  SearchConfiguration config{SearchMode::Movns, {}};
  std::size_t pos = 0;
  while (pos <= list.size()) {
    const auto comma = std::min(list.find(',', pos), list.size());
    config.operators.push_back(parse_operator(list.substr(pos, comma - pos)));
    pos = comma + 1;
  }
  if (config.operators.size() < 2) throw ConfigError("movns configuration needs at least two operators");
  return config;
}

namespace {

void finalize(RunRecord& record, const ParetoArchive& archive) {
  record.archive = archive.entries();
  std::vector<const ArchiveEntry*> sorted;
  for (const auto& e : record.archive) sorted.push_back(&e);
  std::sort(sorted.begin(), sorted.end(), [](const ArchiveEntry* a, const ArchiveEntry* b) {
    return std::tie(a->vector, a->permutation) < std::tie(b->vector, b->permutation);
  });
  for (const auto* e : sorted) {
    if (!record.vectors.empty() && record.vectors.back() == e->vector) continue;
    record.vectors.push_back(e->vector);
    record.witnesses.push_back(e->permutation);
  }
}

RunRecord local_search(const Instance& instance, const SearchConfig& config, const EvaluationObserver& observer) {
  config.validate(instance.jobs);
  const auto started = std::chrono::steady_clock::now();

  RunRecord record;
  record.configuration = configuration_label(config.mode, config.operators);
  record.criteria = config.criteria;
  record.seed = config.seed;
  record.operator_draws.assign(config.operators.size(), 0);
  auto& counters = record.counters;

  SplitMix64 rng(config.seed);
  Evaluator evaluate(instance, config.criteria);
  ParetoArchive archive(config.criteria);

  Permutation start = config.initial.value_or(Permutation{});
  if (!config.initial) {
    std::vector<int> order(instance.jobs);
    std::iota(order.begin(), order.end(), 0);
    shuffle(std::span<int>(order), rng);
    start = Permutation(std::move(order));
  }
  ObjectiveVector vector = evaluate(start);
  ++counters.evaluated;
  if (observer) observer(start, vector);
  archive.update(std::move(start), std::move(vector));
  ++counters.insertions;

  while (auto selected = archive.select_unexplored(rng)) {
    if (config.max_selections && counters.selections >= config.max_selections)
      throw Error("search exceeded the selection watchdog of " + std::to_string(config.max_selections));
    ++counters.selections;

    std::size_t op = 0;
    if (config.mode == SearchMode::Movns && config.operators.size() > 1) op = static_cast<std::size_t>(rng.below(config.operators.size()));
    ++record.operator_draws[op];

    const auto neighbours = generate(config.operators[op], selected->permutation);
    ++counters.neighbourhoods;
    counters.neighbourhood_sizes += neighbours.size();
    for (const auto& x : neighbours) {
      evaluate.evaluate(x.order(), vector);
      ++counters.evaluated;
      if (observer) observer(x, vector);
      auto outcome = archive.update(x, vector);
      if (outcome.inserted()) ++counters.insertions;
      counters.removals += outcome.removed.size();
    }
    archive.mark_investigated(selected->permutation);
  }

  finalize(record, archive);
  record.elapsed_us = std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - started).count();
  return record;
}

}  // namespace

RunRecord molsd(const Instance& instance, const SearchConfig& config, const EvaluationObserver& observer) {
  if (config.mode != SearchMode::Molsd) throw ConfigError("molsd called with a MOVNS configuration");
  return local_search(instance, config, observer);
}

RunRecord movns(const Instance& instance, const SearchConfig& config, const EvaluationObserver& observer) {
  if (config.mode != SearchMode::Movns) throw ConfigError("movns called with a MOLSD configuration");
  return local_search(instance, config, observer);
}

RunRecord run_search(const Instance& instance, const SearchConfig& config, const EvaluationObserver& observer) {
  return local_search(instance, config, observer);
}

std::uint64_t run_seed(std::uint64_t master, std::size_t instance_index, std::size_t run) {
  return derive_seed(master, "search", instance_index, run);
}

std::vector<RunRecord> run_batch(std::span<const Instance> instances, const SearchConfig& config,
                                 std::size_t runs_per_instance, Execution execution) {
  if (runs_per_instance == 0) throw ConfigError("runs per instance must be >= 1");
  for (const auto& inst : instances) config.validate(inst.jobs);

  const std::size_t total = instances.size() * runs_per_instance;
  std::vector<RunRecord> records(total);
  std::exception_ptr failure;

  auto run_one = [&](std::size_t slot) {
    const std::size_t i = slot / runs_per_instance;
    const std::size_t r = slot % runs_per_instance;
    SearchConfig local = config;
    local.seed = run_seed(config.seed, i, r);
    records[slot] = run_search(instances[i], local);
    records[slot].instance_index = i;
    records[slot].run_index = r;
  };

  if (execution == Execution::Serial) {
    for (std::size_t slot = 0; slot < total; ++slot) run_one(slot);
    return records;
  }

  const auto n = static_cast<std::int64_t>(total);
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t slot = 0; slot < n; ++slot) {
    try {
      run_one(static_cast<std::size_t>(slot));
    } catch (...) {
#pragma omp critical(mofs_batch_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return records;
}

void write_record_jsonl(std::ostream& out, const RunRecord& record, std::string_view config_digest) {
  nlohmann::ordered_json j;
  j["instance"] = record.instance_id;
  j["instance_index"] = record.instance_index;
  j["run"] = record.run_index;
  j["configuration"] = record.configuration;
  j["criteria"] = record.criteria.name;
  j["objectives"] = record.criteria.tags();
  j["idle_horizon"] = record.criteria.idle_horizon == IdleHorizon::MachineLast ? "machine" : "makespan";
  j["config_digest"] = config_digest;
  j["seed"] = record.seed;
  j["evaluated"] = record.counters.evaluated;
  j["neighbourhoods"] = record.counters.neighbourhoods;
  j["neighbourhood_sizes"] = record.counters.neighbourhood_sizes;
  j["selections"] = record.counters.selections;
  j["insertions"] = record.counters.insertions;
  j["removals"] = record.counters.removals;
  j["operator_draws"] = record.operator_draws;
  j["elapsed_us"] = record.elapsed_us;
  j["archive_size"] = record.archive.size();
  j["vectors"] = record.vectors;
  auto& w = j["witnesses"] = nlohmann::ordered_json::array();
  for (const auto& p : record.witnesses) w.push_back(p.to_string());
  out << j.dump() << '\n';
}

std::vector<RunRecord> read_records_jsonl(std::istream& in) {
  std::vector<RunRecord> records;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    try {
      const auto j = nlohmann::json::parse(line);
      RunRecord r;
      r.instance_id = j.at("instance").get<std::string>();
      r.instance_index = j.at("instance_index").get<std::size_t>();
      r.run_index = j.at("run").get<std::size_t>();
      r.configuration = j.at("configuration").get<std::string>();
      r.criteria = parse_criteria(j.at("objectives").get<std::string>());
      r.criteria.name = j.at("criteria").get<std::string>();
      if (j.value("idle_horizon", std::string("machine")) == "makespan") r.criteria.idle_horizon = IdleHorizon::Makespan;
      r.seed = j.at("seed").get<std::uint64_t>();
      r.counters.evaluated = j.at("evaluated").get<std::uint64_t>();
      r.counters.neighbourhoods = j.at("neighbourhoods").get<std::uint64_t>();
      r.counters.neighbourhood_sizes = j.at("neighbourhood_sizes").get<std::uint64_t>();
      r.counters.selections = j.at("selections").get<std::uint64_t>();
      r.counters.insertions = j.at("insertions").get<std::uint64_t>();
      r.counters.removals = j.at("removals").get<std::uint64_t>();
      r.operator_draws = j.at("operator_draws").get<std::vector<std::uint64_t>>();
      r.elapsed_us = j.at("elapsed_us").get<std::int64_t>();
      r.vectors = j.at("vectors").get<std::vector<ObjectiveVector>>();
      for (const auto& w : j.at("witnesses")) r.witnesses.push_back(Permutation::parse(w.get<std::string>()));
      records.push_back(std::move(r));
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(line_no, std::string("malformed run record: ") + e.what());
    } catch (const Error& e) {
      throw ParseError(line_no, std::string("malformed run record: ") + e.what());
    }
  }
  return records;
}

}  // namespace mofs
