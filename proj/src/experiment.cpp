#include "mofs/experiment.hpp"

#include <omp.h>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>

#include <json.hpp>

#include "mofs/errors.hpp"
#include "mofs/instance.hpp"
#include "mofs/metrics.hpp"
#include "mofs/rng.hpp"
#include "mofs/search.hpp"

namespace fs = std::filesystem;

namespace mofs {

namespace {

std::string hex16(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

std::string real(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string horizon_name(IdleHorizon h) { return h == IdleHorizon::MachineLast ? "machine" : "makespan"; }

void apply_threads(const ExperimentConfig& config) {
  if (config.threads > 0) omp_set_num_threads(static_cast<int>(config.threads));
}

std::ofstream open_output(const fs::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path.string());
  return out;
}

void ensure_dir(const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec || !fs::is_directory(dir)) throw IoError("cannot create directory " + dir.string());
}

std::vector<fs::path> sorted_paths(std::span<const fs::path> files) {
  std::vector<fs::path> sorted(files.begin(), files.end());
  std::sort(sorted.begin(), sorted.end());
  return sorted;
}

}  // namespace

void ExperimentConfig::validate() const {
  if (instances == 0) throw ConfigError("instance count must be >= 1");
  if (jobs == 0 || machines == 0) throw ConfigError("n and m must be >= 1");
  if (tau < 0.0 || range < 0.0) throw ConfigError("tau and range must be nonnegative");
  if (runs == 0) throw ConfigError("runs must be >= 1");
  if (!(alpha > 0.0 && alpha < 1.0)) throw ConfigError("alpha must lie in (0, 1)");
  if (criteria.empty()) throw ConfigError("at least one criteria set is required");
  if (configurations.empty()) throw ConfigError("at least one search configuration is required");
  for (const auto& c : criteria) parse_criteria(c);
  for (const auto& c : configurations) parse_configuration(c);
}

std::vector<CriteriaSet> ExperimentConfig::criteria_sets() const {
  std::vector<CriteriaSet> sets;
  for (const auto& c : criteria) {
    auto set = parse_criteria(c);
    set.idle_horizon = idle_horizon;
    sets.push_back(std::move(set));
  }
  return sets;
}

std::string config_digest(const ExperimentConfig& config, std::string_view stage) {
  std::ostringstream canon;
  canon << "stage=" << stage << ';';
  if (stage == "generate" || stage == "solve" || stage == "report")
    canon << "seed=" << config.seed << ";instances=" << config.instances << ";n=" << config.jobs
          << ";m=" << config.machines << ";tau=" << real(config.tau) << ";range=" << real(config.range) << ';';
  if (stage != "generate") {
    canon << "criteria=";
    for (const auto& c : config.criteria) canon << c << '|';
    canon << ";idle=" << horizon_name(config.idle_horizon) << ';';
  }
  if (stage == "enumerate") canon << "oracle_limit=" << config.oracle_limit << ';';
  if (stage == "solve" || stage == "report") {
    canon << "configurations=";
    for (const auto& c : config.configurations) canon << c << '|';
    canon << ";runs=" << config.runs << ';';
  }
  if (stage == "report") canon << "alpha=" << real(config.alpha) << ";test=" << (config.test == TTestKind::Welch ? "welch" : "student") << ';';
  return hex16(fnv1a64(canon.str()));
}

std::string file_token(std::string_view label) {
  std::string token;
  for (char c : label) {
    switch (c) {
      case '/': break;
      case '{': token += '_'; break;
      case '}': break;
      case ',': token += '+'; break;
      default: token += c;
    }
  }
  return token;
}

std::vector<fs::path> list_instance_files(const fs::path& dir) {
  if (!fs::is_directory(dir)) throw IoError("not a directory: " + dir.string());
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir))
    if (entry.is_regular_file() && entry.path().extension() == ".txt") files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  return files;
}

std::vector<fs::path> cmd_generate(const ExperimentConfig& config) {
  config.validate();
  const fs::path dir = config.out / "instances";
  ensure_dir(dir);
  const std::string digest = config_digest(config, "generate");

  nlohmann::ordered_json manifest;
  manifest["config_digest"] = digest;
  manifest["master_seed"] = config.seed;
  manifest["instances"] = config.instances;
  manifest["n"] = config.jobs;
  manifest["m"] = config.machines;
  manifest["tau"] = config.tau;
  manifest["range"] = config.range;
  manifest["processing_times"] = "uniform integers in [1, 99]";
  manifest["due_dates"] = "uniform in [floor(P*((1-tau)-range/2)), floor(P*((1-tau)+range/2))], clamped at 0";
  manifest["created"] = [] {
    const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
    return std::string(buf);
  }();
  auto& files = manifest["files"] = nlohmann::ordered_json::array();

  std::vector<fs::path> paths;
  for (std::size_t i = 0; i < config.instances; ++i) {
    GeneratorConfig gen{config.jobs, config.machines, derive_seed(config.seed, "instance", i), config.tau, config.range};
    char name[32];
    std::snprintf(name, sizeof name, "inst_%04zu.txt", i);
    const fs::path path = dir / name;
    write_instance(path, generate_instance(gen));
    files.push_back({{"file", name}, {"seed", gen.seed}});
    paths.push_back(path);
  }
  auto out = open_output(dir / "manifest.json");
  out << manifest.dump(2) << '\n';
  return paths;
}

std::vector<fs::path> cmd_enumerate(const ExperimentConfig& config, std::span<const fs::path> instance_files) {
  config.validate();
  apply_threads(config);
  const fs::path dir = config.out / "fronts";
  ensure_dir(dir);
  const std::string digest = config_digest(config, "enumerate");
  const auto criteria = config.criteria_sets();

  std::vector<fs::path> written;
  for (const auto& file : sorted_paths(instance_files)) {
    const Instance instance = read_instance(file);
    for (const auto& set : criteria) {
      const ReferenceFront front = enumerate_pareto(instance, set, config.oracle_limit);
      const std::string base = file.stem().string() + "." + set.name;
      const fs::path front_path = dir / (base + ".csv");
      const fs::path witness_path = dir / (base + ".witnesses.csv");
      {
        auto out = open_output(front_path);
        write_front_csv(out, front, digest);
      }
      {
        auto out = open_output(witness_path);
        write_witnesses_csv(out, front, digest);
      }
      written.push_back(front_path);
      written.push_back(witness_path);
    }
  }
  return written;
}

std::vector<fs::path> cmd_solve(const ExperimentConfig& config, std::span<const fs::path> instance_files) {
  config.validate();
  apply_threads(config);
  const fs::path dir = config.out / "runs";
  ensure_dir(dir);
  const std::string digest = config_digest(config, "solve");

  const auto files = sorted_paths(instance_files);
  std::vector<Instance> instances;
  for (const auto& f : files) instances.push_back(read_instance(f));

  std::vector<fs::path> written;
  for (const auto& set : config.criteria_sets()) {
    for (const auto& text : config.configurations) {
      const auto parsed = parse_configuration(text);
      SearchConfig search;
      search.criteria = set;
      search.operators = parsed.operators;
      search.mode = parsed.mode;
      search.seed = config.seed;
      const auto records = run_batch(instances, search, config.runs, Execution::Parallel);

      const std::string label = parsed.label();
      for (std::size_t i = 0; i < files.size(); ++i) {
        const fs::path path = dir / (files[i].stem().string() + "." + set.name + "." + file_token(label) + ".jsonl");
        auto out = open_output(path);
        for (std::size_t r = 0; r < config.runs; ++r) {
          RunRecord record = records[i * config.runs + r];
          record.instance_id = files[i].stem().string();
          write_record_jsonl(out, record, digest);
        }
        written.push_back(path);
      }
    }
  }
  return written;
}

std::vector<fs::path> cmd_report(const ExperimentConfig& config) {
  config.validate();
  const fs::path runs_dir = config.out / "runs";
  const fs::path fronts_dir = config.out / "fronts";
  const fs::path dir = config.out / "report";
  if (!fs::is_directory(runs_dir)) throw IoError("no run records in " + runs_dir.string());
  ensure_dir(dir / "frequency");
  const std::string digest = config_digest(config, "report");

  // (criteria, instance, configuration) -> records, ordered by run index.
  std::map<std::tuple<std::string, std::string, std::string>, std::vector<RunRecord>> groups;
  std::vector<fs::path> record_files;
  for (const auto& entry : fs::directory_iterator(runs_dir))
    if (entry.is_regular_file() && entry.path().extension() == ".jsonl") record_files.push_back(entry.path());
  std::sort(record_files.begin(), record_files.end());
  for (const auto& path : record_files) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot read " + path.string());
    for (auto& r : read_records_jsonl(in))
      groups[{r.criteria.name, r.instance_id, r.configuration}].push_back(std::move(r));
  }
  if (groups.empty()) throw IoError("no run records in " + runs_dir.string());

  std::map<std::pair<std::string, std::string>, ReferenceFront> fronts;
  auto front_for = [&](const std::string& criteria, const std::string& instance) -> const ReferenceFront& {
    auto key = std::make_pair(criteria, instance);
    auto it = fronts.find(key);
    if (it != fronts.end()) return it->second;
    const fs::path path = fronts_dir / (instance + "." + criteria + ".csv");
    std::ifstream in(path);
    if (!in) throw IoError("reference front missing for instance " + instance + " under " + criteria + " (" + path.string() + ")");
    return fronts.emplace(key, read_front_csv(in)).first->second;
  };

  std::vector<std::string> column_order;
  for (const auto& c : config.configurations) column_order.push_back(parse_configuration(c).label());

  std::vector<SampleCell> d1_cells, d2_cells;
  std::vector<fs::path> written;
  const fs::path metrics_path = dir / "metrics.csv";
  auto metrics = open_output(metrics_path);
  metrics << "# config_digest=" << digest << '\n';
  metrics << "criteria,instance,configuration,run,seed,d1,d2,covered,reference_size,archive_vectors\n";

  // Group keys sort by std::string; emit rows in natural order instead.
  std::vector<const decltype(groups)::value_type*> ordered;
  for (const auto& g : groups) ordered.push_back(&g);
  std::sort(ordered.begin(), ordered.end(), [](auto* a, auto* b) {
    const auto& [ca, ia, ka] = a->first;
    const auto& [cb, ib, kb] = b->first;
    if (ca != cb) return natural_less(ca, cb);
    if (ia != ib) return natural_less(ia, ib);
    return ka < kb;
  });

  for (const auto* group : ordered) {
    const auto& [criteria, instance, configuration] = group->first;
    auto records = group->second;
    std::sort(records.begin(), records.end(), [](const RunRecord& a, const RunRecord& b) { return a.run_index < b.run_index; });
    const ReferenceFront& front = front_for(criteria, instance);

    SampleCell d1{criteria, instance, configuration, {}}, d2{criteria, instance, configuration, {}};
    for (const auto& r : records) {
      const MetricReport m = d1_d2(r.vectors, front);
      d1.values.push_back(m.d1);
      d2.values.push_back(m.d2);
      metrics << criteria << ',' << instance << ',' << configuration << ',' << r.run_index << ',' << r.seed << ','
              << real(m.d1) << ',' << real(m.d2) << ',' << m.covered << ',' << m.reference_size << ','
              << r.vectors.size() << '\n';
    }
    d1_cells.push_back(std::move(d1));
    d2_cells.push_back(std::move(d2));

    const FrequencyTable freq = identification_frequency(records, front);
    const fs::path freq_path = dir / "frequency" / (instance + "." + criteria + "." + file_token(configuration) + ".csv");
    auto out = open_output(freq_path);
    write_frequency_csv(out, freq, front.criteria, digest);
    written.push_back(freq_path);
  }
  written.push_back(metrics_path);

  // Per (criteria, configuration): averages over instances of the per-instance mean metrics.
  {
    const fs::path path = dir / "summary.csv";
    auto out = open_output(path);
    out << "# config_digest=" << digest << '\n';
    out << "criteria,configuration,instances,mean_d1,mean_d2\n";
    std::map<std::pair<std::string, std::string>, std::tuple<std::size_t, double, double>> acc;
    for (std::size_t c = 0; c < d1_cells.size(); ++c) {
      auto mean = [](const std::vector<double>& v) { return std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size()); };
      auto& [count, s1, s2] = acc[{d1_cells[c].criteria, d1_cells[c].configuration}];
      ++count;
      s1 += mean(d1_cells[c].values);
      s2 += mean(d2_cells[c].values);
    }
    for (const auto& [key, value] : acc) {
      const auto& [count, s1, s2] = value;
      out << key.first << ',' << key.second << ',' << count << ',' << real(s1 / static_cast<double>(count)) << ','
          << real(s2 / static_cast<double>(count)) << '\n';
    }
    written.push_back(path);
  }

  for (const auto& [metric, cells] : {std::pair{std::string("D1"), &d1_cells}, std::pair{std::string("D2"), &d2_cells}}) {
    const SignificanceTable table = build_table(*cells, column_order, config.alpha, metric, config.test);
    const std::string stem = metric == "D1" ? "significance_d1" : "significance_d2";
    {
      auto out = open_output(dir / (stem + ".csv"));
      out << "# config_digest=" << digest << '\n';
      write_table_csv(out, table);
    }
    {
      auto out = open_output(dir / (stem + ".txt"));
      out << "# config_digest=" << digest << '\n';
      write_table_text(out, table);
    }
    written.push_back(dir / (stem + ".csv"));
    written.push_back(dir / (stem + ".txt"));
  }
  return written;
}

void run_experiment(const ExperimentConfig& config) {
  const auto instances = cmd_generate(config);
  cmd_enumerate(config, instances);
  cmd_solve(config, instances);
  cmd_report(config);
}

}  // namespace mofs
