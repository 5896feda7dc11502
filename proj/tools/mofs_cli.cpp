// mofs: multi-objective permutation flow shop experiments.
//
//   mofs generate   --seed 7 --instances 20 -n 10 -m 10 --out results
//   mofs enumerate  --criteria gamma11 --out results [instance files...]
//   mofs solve      --criteria gamma11 --config 1-FSH --config movns:1-BSH,1-FSH,1-EX --runs 30
//   mofs report     --alpha 0.01 --out results
//   mofs experiment (all four stages)
//
// Exit codes: 0 success, 1 usage error, 2 data error.

#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mofs/errors.hpp"
#include "mofs/experiment.hpp"

namespace fs = std::filesystem;

namespace {

constexpr int kUsageError = 1;
constexpr int kDataError = 2;

struct Options {
  mofs::ExperimentConfig config;
  std::vector<std::string> files;
  std::string idle = "machine";
  std::string test = "welch";
};

void add_seed(CLI::App& cmd, Options& o) {
  cmd.add_option("--seed", o.config.seed, "Master seed")->capture_default_str();
}
void add_out(CLI::App& cmd, Options& o) {
  cmd.add_option("--out", o.config.out, "Output directory")->capture_default_str();
}
void add_jobs(CLI::App& cmd, Options& o) {
  cmd.add_option("--jobs", o.config.threads, "Worker threads (0 = OpenMP default)")->capture_default_str();
}
void add_generation(CLI::App& cmd, Options& o) {
  cmd.add_option("--instances", o.config.instances, "Number of instances")->capture_default_str();
  cmd.add_option("-n,--num-jobs", o.config.jobs, "Jobs per instance")->capture_default_str();
  cmd.add_option("-m,--num-machines", o.config.machines, "Machines per instance")->capture_default_str();
  cmd.add_option("--tau", o.config.tau, "Due-date tardiness factor")->capture_default_str();
  cmd.add_option("--range", o.config.range, "Due-date range factor")->capture_default_str();
}
void add_criteria(CLI::App& cmd, Options& o) {
  cmd.add_option("--criteria", o.config.criteria, "Criteria sets: gamma1..gamma12, 'all', or tags like CMAX,U")
      ->capture_default_str();
  cmd.add_option("--idle-horizon", o.idle, "Idle time up to each machine's last completion or the makespan")
      ->check(CLI::IsMember({"machine", "makespan"}))
      ->capture_default_str();
}
void add_configs(CLI::App& cmd, Options& o) {
  cmd.add_option("--config", o.config.configurations,
                 "Search configuration: k-EX, k-FSH, k-BSH, INV, movns:<op,op,...>, movns:all3, movns:all9")
      ->capture_default_str();
}
void add_runs(CLI::App& cmd, Options& o) {
  cmd.add_option("--runs", o.config.runs, "Runs per instance and configuration")->capture_default_str();
}
void add_oracle(CLI::App& cmd, Options& o) {
  cmd.add_option("--oracle-limit", o.config.oracle_limit, "Largest n the exhaustive oracle accepts")->capture_default_str();
}
void add_report(CLI::App& cmd, Options& o) {
  cmd.add_option("--alpha", o.config.alpha, "Significance level")->capture_default_str();
  cmd.add_option("--ttest", o.test, "t-test variant")->check(CLI::IsMember({"welch", "student"}))->capture_default_str();
}
void add_files(CLI::App& cmd, Options& o) {
  cmd.add_option("files", o.files, "Instance files (default: <out>/instances/*.txt)");
}

void finish_options(Options& o) {
  o.config.idle_horizon = o.idle == "makespan" ? mofs::IdleHorizon::Makespan : mofs::IdleHorizon::MachineLast;
  o.config.test = o.test == "student" ? mofs::TTestKind::Student : mofs::TTestKind::Welch;
  std::vector<std::string> expanded;
  for (const auto& c : o.config.criteria) {
    if (c == "all") {
      for (auto& name : mofs::builtin_criteria_names()) expanded.push_back(name);
    } else {
      expanded.push_back(c);
    }
  }
  o.config.criteria = std::move(expanded);
}

std::vector<fs::path> instance_files(const Options& o) {
  if (!o.files.empty()) return {o.files.begin(), o.files.end()};
  return mofs::list_instance_files(o.config.out / "instances");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multi-objective permutation flow shop: instance generation, exact fronts, MOLSD/MOVNS runs, reports"};
  app.set_config("--config-file", "", "key=value (TOML) file with option defaults; flags win");
  app.require_subcommand(1);

  Options o;
  auto* generate = app.add_subcommand("generate", "Write random instances and a manifest");
  add_seed(*generate, o);
  add_generation(*generate, o);
  add_out(*generate, o);

  auto* enumerate = app.add_subcommand("enumerate", "Exact Pareto fronts by exhaustive enumeration");
  add_files(*enumerate, o);
  add_criteria(*enumerate, o);
  add_oracle(*enumerate, o);
  add_jobs(*enumerate, o);
  add_out(*enumerate, o);

  auto* solve = app.add_subcommand("solve", "Run MOLSD/MOVNS and write JSON-lines run records");
  add_files(*solve, o);
  add_seed(*solve, o);
  add_criteria(*solve, o);
  add_configs(*solve, o);
  add_runs(*solve, o);
  add_jobs(*solve, o);
  add_out(*solve, o);

  auto* report = app.add_subcommand("report", "D1/D2 metrics, significance tables and identification frequencies");
  add_configs(*report, o);
  add_report(*report, o);
  add_out(*report, o);

  auto* experiment = app.add_subcommand("experiment", "generate, enumerate, solve and report in one go");
  add_seed(*experiment, o);
  add_generation(*experiment, o);
  add_criteria(*experiment, o);
  add_configs(*experiment, o);
  add_runs(*experiment, o);
  add_oracle(*experiment, o);
  add_report(*experiment, o);
  add_jobs(*experiment, o);
  add_out(*experiment, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsageError;
  }

  try {
    finish_options(o);
    if (generate->parsed()) {
      const auto files = mofs::cmd_generate(o.config);
      std::cout << "wrote " << files.size() << " instances to " << (o.config.out / "instances").string() << '\n';
    } else if (enumerate->parsed()) {
      const auto files = mofs::cmd_enumerate(o.config, instance_files(o));
      std::cout << "wrote " << files.size() / 2 << " fronts to " << (o.config.out / "fronts").string() << '\n';
    } else if (solve->parsed()) {
      const auto files = mofs::cmd_solve(o.config, instance_files(o));
      std::cout << "wrote " << files.size() << " run-record files to " << (o.config.out / "runs").string() << '\n';
    } else if (report->parsed()) {
      const auto files = mofs::cmd_report(o.config);
      std::cout << "wrote " << files.size() << " report files to " << (o.config.out / "report").string() << '\n';
    } else if (experiment->parsed()) {
      mofs::run_experiment(o.config);
      std::cout << "experiment written to " << o.config.out.string() << '\n';
    }
  } catch (const mofs::ConfigError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsageError;
  } catch (const mofs::LookupError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kDataError;
  }
  return 0;
}
