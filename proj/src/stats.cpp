#include "mofs/stats.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <iomanip>
#include <limits>
#include <map>
#include <numeric>
#include <ostream>
#include <set>

#include "mofs/errors.hpp"

namespace mofs {

namespace {

// Modified Lentz evaluation of the incomplete beta continued fraction.
double beta_continued_fraction(double a, double b, double x) {
  constexpr int kMaxIterations = 10000;
  constexpr double kEps = 1e-16;
  constexpr double kTiny = 1e-300;
  const double qab = a + b, qap = a + 1.0, qam = a - 1.0;
  double c = 1.0;
  double d = 1.0 - qab * x / qap;
  if (std::fabs(d) < kTiny) d = kTiny;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m <= kMaxIterations; ++m) {
    const double m2 = 2.0 * m;
    double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    h *= d * c;
    aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::fabs(del - 1.0) < kEps) return h;
  }
  return h;
}

struct Moments {
  double mean = 0.0;
  double var = 0.0;  // unbiased
  double n = 0.0;
};

// Moments of x - pivot. A pivot shared by both samples and moving with them keeps
// the test exactly invariant under shifts of exactly representable data.
Moments moments(std::span<const double> x, double pivot) {
  if (x.size() < 2) throw InvalidArgument("t-test needs at least two values per sample");
  Moments m;
  m.n = static_cast<double>(x.size());
  double sum = 0.0;
  for (double v : x) sum += v - pivot;
  m.mean = sum / m.n;
  double ss = 0.0;
  for (double v : x) ss += (v - pivot - m.mean) * (v - pivot - m.mean);
  m.var = ss / (m.n - 1.0);
  return m;
}

TTestResult degenerate(const Moments& a, const Moments& b, double df) {
  TTestResult r;
  r.df = df;
  if (a.mean < b.mean) {
    r.t = -std::numeric_limits<double>::infinity();
    r.p_less = 0.0;
  } else if (a.mean > b.mean) {
    r.t = std::numeric_limits<double>::infinity();
    r.p_less = 1.0;
  } else {
    r.t = 0.0;
    r.p_less = 1.0;
  }
  return r;
}

double common_pivot(std::span<const double> a, std::span<const double> b) {
  if (a.empty() || b.empty()) throw InvalidArgument("t-test needs at least two values per sample");
  return std::min(a.front(), b.front());
}

}  // namespace

double regularized_incomplete_beta(double a, double b, double x) {
  if (a <= 0.0 || b <= 0.0) throw InvalidArgument("incomplete beta needs a, b > 0");
  if (x <= 0.0) return 0.0;
  if (x >= 1.0) return 1.0;
  const double log_front = std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) + a * std::log(x) + b * std::log1p(-x);
  const double front = std::exp(log_front);
  if (x < (a + 1.0) / (a + b + 2.0)) return front * beta_continued_fraction(a, b, x) / a;
  return 1.0 - front * beta_continued_fraction(b, a, 1.0 - x) / b;
}

double student_t_cdf(double t, double df) {
  if (!(df > 0.0)) throw InvalidArgument("t distribution needs df > 0");
  if (std::isinf(t)) return t < 0 ? 0.0 : 1.0;
  const double x = df / (df + t * t);
  const double tail = 0.5 * regularized_incomplete_beta(df / 2.0, 0.5, x);  // P(T <= -|t|)
  return t < 0 ? tail : 1.0 - tail;
}

TTestResult welch_t(std::span<const double> a, std::span<const double> b) {
  const double pivot = common_pivot(a, b);
  const Moments ma = moments(a, pivot), mb = moments(b, pivot);
  const double va = ma.var / ma.n, vb = mb.var / mb.n;
  if (va == 0.0 && vb == 0.0) return degenerate(ma, mb, ma.n + mb.n - 2.0);
  TTestResult r;
  r.t = (ma.mean - mb.mean) / std::sqrt(va + vb);
  r.df = (va + vb) * (va + vb) / (va * va / (ma.n - 1.0) + vb * vb / (mb.n - 1.0));
  r.p_less = student_t_cdf(r.t, r.df);
  return r;
}

TTestResult student_t(std::span<const double> a, std::span<const double> b) {
  const double pivot = common_pivot(a, b);
  const Moments ma = moments(a, pivot), mb = moments(b, pivot);
  const double df = ma.n + mb.n - 2.0;
  if (ma.var == 0.0 && mb.var == 0.0) return degenerate(ma, mb, df);
  const double pooled = ((ma.n - 1.0) * ma.var + (mb.n - 1.0) * mb.var) / df;
  TTestResult r;
  r.df = df;
  r.t = (ma.mean - mb.mean) / std::sqrt(pooled * (1.0 / ma.n + 1.0 / mb.n));
  r.p_less = student_t_cdf(r.t, r.df);
  return r;
}

TTestResult t_test(std::span<const double> a, std::span<const double> b, TTestKind kind) {
  return kind == TTestKind::Welch ? welch_t(a, b) : student_t(a, b);
}

std::optional<std::size_t> significantly_best(std::span<const std::vector<double>> samples, double alpha,
                                              TTestKind kind) {
  if (samples.size() < 2) return std::nullopt;
  std::size_t best = 0;
  double best_mean = std::numeric_limits<double>::infinity();
  for (std::size_t c = 0; c < samples.size(); ++c) {
    if (samples[c].empty()) throw InvalidArgument("significantly_best: empty sample");
    const double mean = std::accumulate(samples[c].begin(), samples[c].end(), 0.0) / static_cast<double>(samples[c].size());
    if (mean < best_mean) {
      best_mean = mean;
      best = c;
    }
  }
  for (std::size_t c = 0; c < samples.size(); ++c) {
    if (c == best) continue;
    if (!(t_test(samples[best], samples[c], kind).p_less < alpha)) return std::nullopt;
  }
  return best;
}

bool natural_less(const std::string& a, const std::string& b) {
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (std::isdigit(static_cast<unsigned char>(a[i])) && std::isdigit(static_cast<unsigned char>(b[j]))) {
      std::size_t ie = i, je = j;
      while (ie < a.size() && std::isdigit(static_cast<unsigned char>(a[ie]))) ++ie;
      while (je < b.size() && std::isdigit(static_cast<unsigned char>(b[je]))) ++je;
      const auto x = std::stoull(a.substr(i, ie - i)), y = std::stoull(b.substr(j, je - j));
      if (x != y) return x < y;
      i = ie;
      j = je;
    } else {
      if (a[i] != b[j]) return a[i] < b[j];
      ++i;
      ++j;
    }
  }
  return a.size() - i < b.size() - j;
}

SignificanceTable build_table(std::span<const SampleCell> cells, std::span<const std::string> configuration_order,
                              double alpha, std::string metric, TTestKind kind) {
  SignificanceTable table;
  table.metric = std::move(metric);
  table.alpha = alpha;
  table.kind = kind;

  std::set<std::string, decltype(&natural_less)> rows(&natural_less);
  std::set<std::string> extra_configs;
  // criteria -> instance -> configuration -> values
  std::map<std::string, std::map<std::string, std::map<std::string, const std::vector<double>*>>> grid;
  for (const auto& cell : cells) {
    rows.insert(cell.criteria);
    if (std::find(configuration_order.begin(), configuration_order.end(), cell.configuration) == configuration_order.end())
      extra_configs.insert(cell.configuration);
    auto& slot = grid[cell.criteria][cell.instance][cell.configuration];
    if (slot) throw InvalidArgument("duplicate sample cell (" + cell.criteria + ", " + cell.instance + ", " + cell.configuration + ")");
    slot = &cell.values;
  }
  for (const auto& c : configuration_order) {
    const bool used = std::any_of(cells.begin(), cells.end(), [&](const SampleCell& s) { return s.configuration == c; });
    if (used) table.configurations.push_back(c);
  }
  table.configurations.insert(table.configurations.end(), extra_configs.begin(), extra_configs.end());
  table.criteria.assign(rows.begin(), rows.end());

  for (const auto& criteria : table.criteria) {
    std::vector<std::size_t> counts(table.configurations.size(), 0);
    const auto& instances = grid[criteria];
    std::vector<std::string> names;
    for (const auto& [name, _] : instances) names.push_back(name);
    std::sort(names.begin(), names.end(), natural_less);
    for (const auto& name : names) {
      const auto& by_config = instances.at(name);
      std::vector<std::vector<double>> samples;
      for (const auto& config : table.configurations) {
        const auto it = by_config.find(config);
        if (it == by_config.end())
          throw InvalidArgument("missing sample cell (" + criteria + ", " + name + ", " + config + ")");
        samples.push_back(*it->second);
      }
      if (auto winner = significantly_best(samples, alpha, kind)) ++counts[*winner];
    }
    table.counts.push_back(std::move(counts));
    table.instances.push_back(names.size());
  }
  return table;
}

void write_table_csv(std::ostream& out, const SignificanceTable& table) {
  out << "# metric=" << table.metric << '\n';
  out << "# alpha=" << table.alpha << '\n';
  out << "# test=" << (table.kind == TTestKind::Welch ? "welch" : "student")
      << " one-sided, best mean must beat every other configuration\n";
  out << "criteria,instances";
  for (const auto& c : table.configurations) out << ',' << c;
  out << '\n';
  for (std::size_t r = 0; r < table.criteria.size(); ++r) {
    out << table.criteria[r] << ',' << table.instances[r];
    for (auto n : table.counts[r]) out << ',' << n;
    out << '\n';
  }
}

void write_table_text(std::ostream& out, const SignificanceTable& table) {
  std::size_t first = std::string("criteria").size();
  for (const auto& c : table.criteria) first = std::max(first, c.size());
  std::vector<std::size_t> widths;
  for (const auto& c : table.configurations) widths.push_back(std::max<std::size_t>(c.size(), 4));

  out << "Significantly best counts for " << table.metric << " (alpha = " << table.alpha << ")\n";
  out << std::left << std::setw(static_cast<int>(first)) << "criteria";
  for (std::size_t k = 0; k < widths.size(); ++k)
    out << "  " << std::right << std::setw(static_cast<int>(widths[k])) << table.configurations[k];
  out << '\n';
  for (std::size_t r = 0; r < table.criteria.size(); ++r) {
    out << std::left << std::setw(static_cast<int>(first)) << table.criteria[r];
    for (std::size_t k = 0; k < widths.size(); ++k)
      out << "  " << std::right << std::setw(static_cast<int>(widths[k])) << table.counts[r][k];
    out << '\n';
  }
}

}  // namespace mofs
