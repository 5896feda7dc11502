#include "mofs/instance.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <string>
#include <string_view>

#include "mofs/errors.hpp"
#include "mofs/rng.hpp"

namespace mofs {

void Instance::validate() const {
  if (jobs == 0 || machines == 0) throw InvalidArgument("instance needs at least one job and one machine");
  if (processing.size() != jobs * machines)
    throw InvalidArgument("processing-time matrix does not have n*m entries");
  if (due_dates.size() != jobs) throw InvalidArgument("due-date vector does not have n entries");
  if (std::any_of(processing.begin(), processing.end(), [](Time t) { return t < 0; }))
    throw InvalidArgument("negative processing time");
  if (std::any_of(due_dates.begin(), due_dates.end(), [](Time d) { return d < 0; }))
    throw InvalidArgument("negative due date");
}

Instance make_instance(const std::vector<std::vector<Time>>& rows, std::vector<Time> due_dates) {
  Instance inst;
  inst.jobs = rows.size();
  inst.machines = rows.empty() ? 0 : rows.front().size();
  for (const auto& r : rows) {
    if (r.size() != inst.machines) throw InvalidArgument("ragged processing-time rows");
    inst.processing.insert(inst.processing.end(), r.begin(), r.end());
  }
  inst.due_dates = std::move(due_dates);
  inst.validate();
  return inst;
}

Instance generate_processing_times(const GeneratorConfig& config) {
  if (config.jobs == 0 || config.machines == 0)
    throw ConfigError("generator needs n >= 1 and m >= 1");
  Instance inst;
  inst.jobs = config.jobs;
  inst.machines = config.machines;
  inst.processing.resize(config.jobs * config.machines);
  inst.due_dates.assign(config.jobs, 0);
  SplitMix64 rng(derive_seed(config.seed, "processing-times"));
  for (auto& t : inst.processing) t = rng.uniform_int(1, 99);
  return inst;
}

Time makespan_lower_bound(const Instance& instance) {
  Time bound = 0;
  for (std::size_t i = 0; i < instance.machines; ++i) {
    Time load = 0;
    for (std::size_t j = 0; j < instance.jobs; ++j) load += instance.time(j, i);
    bound = std::max(bound, load);
  }
  for (std::size_t j = 0; j < instance.jobs; ++j) {
    const auto r = instance.row(j);
    bound = std::max(bound, std::accumulate(r.begin(), r.end(), Time{0}));
  }
  return bound;
}

std::vector<Time> generate_due_dates(const Instance& instance, const GeneratorConfig& config) {
  if (instance.jobs == 0 || instance.machines == 0 || instance.processing.size() != instance.jobs * instance.machines)
    throw InvalidArgument("due dates need a populated processing-time matrix");
  if (config.tau < 0.0 || config.range < 0.0) throw ConfigError("tau and range must be nonnegative");

  const auto bound = static_cast<double>(makespan_lower_bound(instance));
  const double centre = 1.0 - config.tau;
  const double half = config.range / 2.0;
  const auto lo = std::max<Time>(0, static_cast<Time>(std::floor(bound * (centre - half))));
  const auto hi = std::max<Time>(0, static_cast<Time>(std::floor(bound * (centre + half))));

  SplitMix64 rng(derive_seed(config.seed, "due-dates"));
  std::vector<Time> due(instance.jobs);
  for (auto& d : due) d = rng.uniform_int(lo, hi);
  return due;
}

Instance generate_instance(const GeneratorConfig& config) {
  Instance inst = generate_processing_times(config);
  inst.due_dates = generate_due_dates(inst, config);
  return inst;
}

namespace {

std::vector<Time> parse_row(std::string_view line, std::size_t line_no) {
  std::vector<Time> values;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t' || line[pos] == '\r')) ++pos;
    if (pos >= line.size()) break;
    Time v = 0;
    const auto* first = line.data() + pos;
    const auto* last = line.data() + line.size();
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || (ptr != last && *ptr != ' ' && *ptr != '\t' && *ptr != '\r'))
      throw ParseError(line_no, "expected an integer");
    if (v < 0) throw ParseError(line_no, "negative entry");
    values.push_back(v);
    pos = static_cast<std::size_t>(ptr - line.data());
  }
  return values;
}

}  // namespace

Instance read_instance(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  auto next_line = [&](const char* what) {
    if (!std::getline(in, line)) throw ParseError(line_no + 1, std::string("unexpected end of file, expected ") + what);
    ++line_no;
    return parse_row(line, line_no);
  };

  const auto header = next_line("header 'n m'");
  if (header.size() != 2 || header[0] < 1 || header[1] < 1)
    throw ParseError(line_no, "malformed header, expected 'n m' with n, m >= 1");

  Instance inst;
  inst.jobs = static_cast<std::size_t>(header[0]);
  inst.machines = static_cast<std::size_t>(header[1]);
  inst.processing.reserve(inst.jobs * inst.machines);
  for (std::size_t j = 0; j < inst.jobs; ++j) {
    const auto row = next_line("processing-time row");
    if (row.size() != inst.machines)
      throw ParseError(line_no, "expected " + std::to_string(inst.machines) + " processing times, got " +
                                    std::to_string(row.size()));
    inst.processing.insert(inst.processing.end(), row.begin(), row.end());
  }
  inst.due_dates = next_line("due-date row");
  if (inst.due_dates.size() != inst.jobs)
    throw ParseError(line_no, "expected " + std::to_string(inst.jobs) + " due dates, got " +
                                  std::to_string(inst.due_dates.size()));
  return inst;
}

Instance read_instance(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open instance file " + path.string());
  return read_instance(in);
}

void write_instance(std::ostream& out, const Instance& instance) {
  auto write_row = [&out](std::span<const Time> row) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out << ' ';
      out << row[i];
    }
    out << '\n';
  };
  out << instance.jobs << ' ' << instance.machines << '\n';
  for (std::size_t j = 0; j < instance.jobs; ++j) write_row(instance.row(j));
  write_row(instance.due_dates);
}

void write_instance(const std::filesystem::path& path, const Instance& instance) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write instance file " + path.string());
  write_instance(out, instance);
  if (!out) throw IoError("write failed for " + path.string());
}

}  // namespace mofs
