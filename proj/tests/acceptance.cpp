// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "mofs/experiment.hpp"
#include "mofs/metrics.hpp"
#include "mofs/neighbourhoods.hpp"
#include "mofs/oracle.hpp"
#include "mofs/pareto.hpp"
#include "mofs/search.hpp"
#include "mofs/stats.hpp"
#include "t_oracle.hpp"

using namespace mofs;
namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail = what;
    pass = pass && ok;
  }
};

int failures = 0;

void report(int id, const std::string& title, const Outcome& o, const std::string& summary, double seconds) {
  std::printf("criterion %d: %s  %s  [%s] (%.1f s)\n", id, o.pass ? "PASS" : "FAIL", title.c_str(),
              o.pass ? summary.c_str() : (o.detail + "; " + summary).c_str(), seconds);
  std::fflush(stdout);
  if (!o.pass) ++failures;
}

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::vector<ObjectiveVector> sorted(std::vector<ObjectiveVector> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

void criterion1() {
  const auto t0 = Clock::now();
  Outcome o;
  std::size_t checks = 0, runs = 0;
  const auto perms = testing::all_permutations(6);
  for (std::uint64_t i = 0; i < 25; ++i) {
    const Instance inst = testing::random_instance(6, 6, 1000 + i);
    for (const auto& name : builtin_criteria_names()) {
      const CriteriaSet crit = builtin_criteria(name);
      Evaluator eval(inst, crit);
      std::vector<ObjectiveVector> all;
      all.reserve(perms.size());
      for (const auto& p : perms) all.push_back(eval(p));
      const ReferenceFront front = enumerate_pareto(inst, crit);
      o.require(front.permutation_count == 720, "permutation count");
      o.require(sorted(front.vectors) == sorted(testing::brute_force_front(all)),
                "oracle differs from filtered enumeration on instance " + std::to_string(i) + " " + name);
      ++checks;

      for (const auto& configuration : {"1-EX", "movns:all3"}) {
        const SearchConfiguration sc = parse_configuration(configuration);
        SearchConfig cfg;
        cfg.criteria = crit;
        cfg.operators = sc.operators;
        cfg.mode = sc.mode;
        cfg.seed = derive_seed(77, name, i, sc.operators.size());
        std::vector<ObjectiveVector> seen;
        const RunRecord rec = run_search(inst, cfg, [&](const Permutation&, const ObjectiveVector& v) { seen.push_back(v); });
        const auto closure = testing::brute_force_front(seen);
        for (const auto& v : rec.vectors)
          o.require(std::find(closure.begin(), closure.end(), v) != closure.end(),
                    std::string("archive vector outside evaluated closure: ") + configuration);
        ++runs;
      }
    }
  }
  report(1, "oracle equivalence", o, std::to_string(checks) + " fronts, " + std::to_string(runs) + " search runs",
         seconds_since(t0));
}

void criterion2() {
  const auto t0 = Clock::now();
  Outcome o;
  const Instance w = testing::worked_instance();
  const auto c12 = evaluate_schedule(w, Permutation::from_one_based({1, 2}));
  o.require(c12.completion == std::vector<Time>{3, 5, 4, 9}, "completion rows for (1,2)");
  const CriteriaSet five{"w", {Objective::Cmax, Objective::Csum, Objective::Tmax, Objective::Tsum, Objective::U}};
  o.require(objective_vector(w, Permutation::from_one_based({1, 2}), five) == ObjectiveVector{9, 14, 3, 3, 1},
            "objectives for (1,2)");
  const CriteriaSet seven{"w",
                          {Objective::Cmax, Objective::Csum, Objective::Tmax, Objective::Tsum, Objective::U,
                           Objective::Imax, Objective::Isum}};
  o.require(objective_vector(w, Permutation::from_one_based({2, 1}), seven) == ObjectiveVector{7, 12, 2, 2, 1, 1, 1},
            "objectives for (2,1)");
  const auto c21 = evaluate_schedule(w, Permutation::from_one_based({2, 1}));
  o.require(c21.job_completion == std::vector<Time>{7, 5}, "job completions for (2,1)");
  const ReferenceFront front = enumerate_pareto(w, builtin_criteria("gamma2"));
  o.require(front.vectors == std::vector<ObjectiveVector>{{7, 12}}, "gamma2 front");
  o.require(front.permutation_count == 2, "gamma2 permutation count");
  report(2, "worked-instance exactness", o, "front {(7,12)}", seconds_since(t0));
}

void criterion3() {
  const auto t0 = Clock::now();
  Outcome o;
  std::size_t cases = 0;
  for (std::size_t n = 1; n <= 12; ++n) {
    SplitMix64 rng(n);
    const Permutation pi = testing::random_permutation(n, rng);
    std::vector<OperatorSpec> specs{{OperatorFamily::Inversion, 1}};
    for (std::size_t k = 1; k <= n; ++k)
      for (auto f : {OperatorFamily::Exchange, OperatorFamily::ForwardShift, OperatorFamily::BackwardShift})
        if (admissible({f, k}, n)) specs.push_back({f, k});
    for (const auto& spec : specs) {
      const auto nb = generate(spec, pi);
      const long long nn = static_cast<long long>(n), k = static_cast<long long>(spec.k);
      long long expected = 0;
      switch (spec.family) {
        case OperatorFamily::Exchange: expected = (nn - 2 * k + 1) * (nn - 2 * k + 2) / 2; break;
        case OperatorFamily::ForwardShift:
        case OperatorFamily::BackwardShift: expected = (nn - k) * (nn - k + 1) / 2; break;
        case OperatorFamily::Inversion: expected = nn * (nn - 1) / 2; break;
      }
      if (n == 1) expected = 0;
      o.require(static_cast<long long>(nb.size()) == expected, "size of " + to_string(spec) + " at n=" + std::to_string(n));
      std::set<Permutation> unique(nb.begin(), nb.end());
      o.require(unique.size() == nb.size(), "duplicates in " + to_string(spec) + " at n=" + std::to_string(n));
      o.require(unique.count(pi) == 0 || n == 1, "identity move in " + to_string(spec));
      ++cases;
    }
  }
  report(3, "neighbourhood cardinalities", o, std::to_string(cases) + " (n, operator) cases", seconds_since(t0));
}

struct TrendResult {
  std::size_t instances = 0;
  std::size_t movns_not_worse = 0;
  std::map<std::string, std::size_t> wins;
};

// Criteria 4 and 5 share one experiment at the default desk-scale protocol.
TrendResult run_trend_experiment() {
  ExperimentConfig config;
  const std::vector<std::string> labels{"1-BSH", "1-FSH", "1-EX", "MOVNS/3"};
  const CriteriaSet crit = builtin_criteria("gamma11");
  TrendResult result;
  result.instances = config.instances;
  for (std::size_t i = 0; i < config.instances; ++i) {
    const GeneratorConfig gen{config.jobs, config.machines, derive_seed(config.seed, "instance", i), config.tau, config.range};
    const Instance inst = generate_instance(gen);
    const ReferenceFront front = enumerate_pareto(inst, crit);
    std::vector<std::vector<double>> d1(config.configurations.size());
    for (std::size_t c = 0; c < config.configurations.size(); ++c) {
      const SearchConfiguration sc = parse_configuration(config.configurations[c]);
      SearchConfig cfg;
      cfg.criteria = crit;
      cfg.operators = sc.operators;
      cfg.mode = sc.mode;
      for (std::size_t r = 0; r < config.runs; ++r) {
        cfg.seed = run_seed(config.seed, i, r);
        d1[c].push_back(d1_d2(run_search(inst, cfg).vectors, front).d1);
      }
    }
    auto mean = [](const std::vector<double>& v) { return std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size()); };
    const double best_single = std::min({mean(d1[0]), mean(d1[1]), mean(d1[2])});
    if (mean(d1[3]) <= best_single) ++result.movns_not_worse;
    if (const auto best = significantly_best(d1, config.alpha)) ++result.wins[labels[*best]];
    std::printf("  instance %2zu: mean D1 1-BSH %.4f 1-FSH %.4f 1-EX %.4f MOVNS/3 %.4f, |P| = %zu\n", i, mean(d1[0]),
                mean(d1[1]), mean(d1[2]), mean(d1[3]), front.vectors.size());
    std::fflush(stdout);
  }
  return result;
}

void criteria4and5() {
  const auto t0 = Clock::now();
  const TrendResult r = run_trend_experiment();
  const double elapsed = seconds_since(t0);
  std::ostringstream wins;
  for (const auto& label : {"1-BSH", "1-FSH", "1-EX", "MOVNS/3"})
    wins << label << '=' << (r.wins.count(label) ? r.wins.at(label) : 0) << ' ';

  Outcome o4;
  const std::size_t movns_wins = r.wins.count("MOVNS/3") ? r.wins.at("MOVNS/3") : 0;
  o4.require(10 * r.movns_not_worse >= 6 * r.instances, "MOVNS/3 mean D1 <= best single operator on " +
                                                            std::to_string(r.movns_not_worse) + "/" +
                                                            std::to_string(r.instances) + " instances (< 60%)");
  for (const auto& label : {"1-BSH", "1-FSH", "1-EX"}) {
    const std::size_t w = r.wins.count(label) ? r.wins.at(label) : 0;
    o4.require(movns_wins > w, std::string("MOVNS/3 significantly-best count not above ") + label);
  }
  report(4, "MOVNS/3 trend", o4,
         "not worse on " + std::to_string(r.movns_not_worse) + "/" + std::to_string(r.instances) + "; wins " + wins.str(),
         elapsed);

  Outcome o5;
  for (const auto& label : {"1-BSH", "1-FSH", "1-EX"}) {
    const std::size_t w = r.wins.count(label) ? r.wins.at(label) : 0;
    o5.require(10 * w <= 9 * r.instances, std::string(label) + " significantly best on more than 90% of instances");
  }
  report(5, "no universally best operator", o5, "wins " + wins.str(), 0.0);
}

// Straight from the definitions: weights from reference ranges, then min / mean / max.
std::pair<double, double> brute_d1_d2(const std::vector<ObjectiveVector>& approx, const std::vector<ObjectiveVector>& ref) {
  const std::size_t k = ref.front().size();
  std::vector<double> w(k);
  for (std::size_t d = 0; d < k; ++d) {
    Value lo = ref[0][d], hi = ref[0][d];
    for (const auto& p : ref) lo = std::min(lo, p[d]), hi = std::max(hi, p[d]);
    w[d] = hi > lo ? 1.0 / static_cast<double>(hi - lo) : 1.0;
  }
  double sum = 0.0, worst = 0.0;
  for (const auto& p : ref) {
    double best = INFINITY;
    for (const auto& a : approx) {
      double dev = 0.0;
      for (std::size_t d = 0; d < k; ++d)
        dev = std::max(dev, w[d] * static_cast<double>(std::max<Value>(0, a[d] - p[d])));
      best = std::min(best, dev);
    }
    sum += best;
    worst = std::max(worst, best);
  }
  return {sum / static_cast<double>(ref.size()), worst};
}

bool close(double got, double want) {
  return std::fabs(got - want) <= 1e-12 * std::max(std::fabs(want), 1e-300) || got == want;
}

void criterion6() {
  const auto t0 = Clock::now();
  Outcome o;
  SplitMix64 rng(6);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t k = 2 + rng.below(5);
    auto random_set = [&](std::size_t count) {
      std::vector<ObjectiveVector> v(count, ObjectiveVector(k));
      for (auto& x : v)
        for (auto& c : x) c = static_cast<Value>(rng.below(1000));
      return v;
    };
    const auto ref = testing::brute_force_front(random_set(1 + rng.below(40)));
    const auto approx = random_set(1 + rng.below(40));
    const auto [d1, d2] = brute_d1_d2(approx, ref);
    const MetricReport m = d1_d2(approx, ref);
    o.require(close(m.d1, d1) && close(m.d2, d2), "mismatch at trial " + std::to_string(trial));

    auto superset = approx;
    superset.insert(superset.end(), ref.begin(), ref.end());
    const MetricReport z = d1_d2(superset, ref);
    o.require(z.d1 == 0.0 && z.d2 == 0.0, "nonzero metric for a superset at trial " + std::to_string(trial));
  }
  report(6, "metric correctness", o, "1000 random pairs", seconds_since(t0));
}

double high_precision_welch_p(const std::vector<double>& a, const std::vector<double>& b) {
  using H = testing::HighPrecision;
  auto moments = [](const std::vector<double>& x) {
    H mean = 0, ss = 0;
    for (double v : x) mean += H(v);
    mean /= H(x.size());
    for (double v : x) ss += (H(v) - mean) * (H(v) - mean);
    return std::pair{mean, ss / H(x.size() - 1) / H(x.size())};
  };
  const auto [ma, va] = moments(a);
  const auto [mb, vb] = moments(b);
  const H t = (ma - mb) / boost::multiprecision::sqrt(va + vb);
  const H df = (va + vb) * (va + vb) / (va * va / H(a.size() - 1) + vb * vb / H(b.size() - 1));
  boost::math::students_t_distribution<H> dist(df);
  return static_cast<double>(boost::math::cdf(dist, t));
}

void criterion7() {
  const auto t0 = Clock::now();
  Outcome o;
  SplitMix64 rng(7);
  double worst = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<double> a(2 + rng.below(40)), b(2 + rng.below(40));
    const double spread_a = 1.0 + static_cast<double>(rng.below(100)), spread_b = 1.0 + static_cast<double>(rng.below(100));
    const double offset = static_cast<double>(rng.uniform_int(-50, 50));
    for (auto& x : a) x = spread_a * static_cast<double>(rng.below(1 << 16)) / (1 << 16);
    for (auto& x : b) x = offset + spread_b * static_cast<double>(rng.below(1 << 16)) / (1 << 16);
    const TTestResult r = welch_t(a, b);
    const double err = std::fabs(r.p_less - high_precision_welch_p(a, b));
    worst = std::max(worst, err);
    o.require(err <= 1e-8, "p-value error " + std::to_string(err) + " at trial " + std::to_string(trial));

    const TTestResult s = welch_t(b, a);
    o.require(s.t == -r.t && s.df == r.df && (r.t < 0 ? s.p_less == 1.0 - r.p_less : r.p_less == 1.0 - s.p_less), "antisymmetry at trial " + std::to_string(trial));

    // Dyadic data and integer shifts keep every shifted value exact.
    const double c = static_cast<double>(rng.uniform_int(-1000, 1000));
    auto as = a, bs = b;
    for (auto& x : as) x += c;
    for (auto& x : bs) x += c;
    const TTestResult u = welch_t(as, bs);
    o.require(u.t == r.t && u.df == r.df && u.p_less == r.p_less, "shift invariance at trial " + std::to_string(trial));
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "100 pairs, max |dp| = %.2e", worst);
  report(7, "statistics correctness", o, buf, seconds_since(t0));
}

std::map<std::string, std::string> csv_files(const fs::path& root) {
  std::map<std::string, std::string> files;
  for (const auto& e : fs::recursive_directory_iterator(root)) {
    if (!e.is_regular_file() || e.path().extension() != ".csv") continue;
    std::ifstream in(e.path(), std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    files[fs::relative(e.path(), root).string()] = s.str();
  }
  return files;
}

void criterion8() {
  const auto t0 = Clock::now();
  Outcome o;
  const fs::path root = fs::temp_directory_path() / "mofs_acceptance_determinism";
  fs::remove_all(root);
  ExperimentConfig config;
  config.seed = 2024;
  config.instances = 3;
  config.jobs = 7;
  config.machines = 5;
  config.runs = 5;
  config.criteria = {"gamma1", "gamma11", "gamma12"};
  config.configurations = {"1-BSH", "1-FSH", "1-EX", "movns:all3", "movns:all9"};
  config.out = root / "a";
  run_experiment(config);
  config.out = root / "b";
  run_experiment(config);
  const auto a = csv_files(root / "a"), b = csv_files(root / "b");
  o.require(!a.empty(), "no CSV output");
  o.require(a.size() == b.size(), "different file sets");
  for (const auto& [name, content] : a) {
    const auto it = b.find(name);
    o.require(it != b.end() && it->second == content, "differs: " + name);
  }
  fs::remove_all(root);
  report(8, "determinism", o, std::to_string(a.size()) + " CSV files byte-identical", seconds_since(t0));
}

void criterion9() {
  const auto t0 = Clock::now();
  Outcome o;
  const Instance inst = testing::random_instance(10, 10, 9);
  Evaluator eval(inst, builtin_criteria("gamma12"));
  SplitMix64 rng(9);
  std::vector<Permutation> perms;
  for (int i = 0; i < 1000; ++i) perms.push_back(testing::random_permutation(10, rng));
  ObjectiveVector out;
  std::vector<double> per_eval;
  volatile Value sink = 0;
  for (int batch = 0; batch < 200; ++batch) {
    const auto b0 = Clock::now();
    for (const auto& p : perms) {
      eval.evaluate(p.order(), out);
      sink = sink + out[0];
    }
    per_eval.push_back(std::chrono::duration<double, std::micro>(Clock::now() - b0).count() / static_cast<double>(perms.size()));
  }
  std::nth_element(per_eval.begin(), per_eval.begin() + per_eval.size() / 2, per_eval.end());
  const double median_us = per_eval[per_eval.size() / 2];
  o.require(median_us < 40.0, "median evaluation " + std::to_string(median_us) + " us");

  SearchConfig cfg;
  cfg.criteria = builtin_criteria("gamma11");
  cfg.operators = {parse_operator("1-EX")};
  cfg.seed = 9;
  const auto r0 = Clock::now();
  const RunRecord rec = molsd(inst, cfg);
  const double run_s = seconds_since(r0);
  o.require(run_s < 5.0, "MOLSD run took " + std::to_string(run_s) + " s");

  char buf[160];
  std::snprintf(buf, sizeof buf, "median evaluation %.3f us (n=m=10, 7 objectives); MOLSD 1-EX run %.3f s, %llu evaluations",
                median_us, run_s, static_cast<unsigned long long>(rec.counters.evaluated));
  report(9, "performance sanity", o, buf, seconds_since(t0));
}

}  // namespace

int main() {
  const std::vector<std::pair<int, std::function<void()>>> steps{
      {1, criterion1}, {2, criterion2}, {3, criterion3}, {4, criteria4and5}, {6, criterion6},
      {7, criterion7}, {8, criterion8}, {9, criterion9}};
  for (const auto& [id, step] : steps) {
    try {
      step();
    } catch (const std::exception& e) {
      std::printf("criterion %d: FAIL  exception: %s\n", id, e.what());
      ++failures;
    }
  }
  std::printf("%d criterion line(s) failed\n", failures);
  return failures == 0 ? 0 : 1;
}
