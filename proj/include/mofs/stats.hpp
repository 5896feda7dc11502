#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace mofs {

/// Regularized incomplete beta I_x(a, b), continued-fraction evaluation.
double regularized_incomplete_beta(double a, double b, double x);

/// P(T <= t) for Student's t with `df` (real, > 0) degrees of freedom.
double student_t_cdf(double t, double df);

struct TTestResult {
  double t = 0.0;
  double df = 0.0;
  double p_less = 0.5;  // one-sided p-value for mean(a) < mean(b)
};

enum class TTestKind { Welch, Student };

/// Welch's unequal-variance t-test with Welch-Satterthwaite degrees of freedom.
/// If both samples have zero variance, p_less is 0 when mean(a) < mean(b) and 1
/// otherwise. Throws InvalidArgument for samples with fewer than two values.
TTestResult welch_t(std::span<const double> a, std::span<const double> b);
/// Pooled-variance Student test; same degenerate rule.
TTestResult student_t(std::span<const double> a, std::span<const double> b);
TTestResult t_test(std::span<const double> a, std::span<const double> b, TTestKind kind);

/// Index of the configuration with the lowest mean if its one-sided test
/// against every other configuration gives p < alpha, otherwise nullopt.
std::optional<std::size_t> significantly_best(std::span<const std::vector<double>> samples, double alpha,
                                              TTestKind kind = TTestKind::Welch);

/// One per-run metric sample for (criteria, instance, configuration).
struct SampleCell {
  std::string criteria;
  std::string instance;
  std::string configuration;
  std::vector<double> values;
};

struct SignificanceTable {
  std::string metric;
  double alpha = 0.01;
  TTestKind kind = TTestKind::Welch;
  std::vector<std::string> criteria;        // rows
  std::vector<std::string> configurations;  // columns
  std::vector<std::vector<std::size_t>> counts;
  std::vector<std::size_t> instances;  // per row
};

/// Counts, per criteria set and configuration, the instances on which that
/// configuration was significantly best. Every instance of a criteria set must
/// have a cell for every configuration. Rows follow natural name order
/// (gamma2 before gamma10); columns follow `configuration_order`, with unlisted
/// configurations appended in name order.
SignificanceTable build_table(std::span<const SampleCell> cells, std::span<const std::string> configuration_order,
                              double alpha, std::string metric, TTestKind kind = TTestKind::Welch);

void write_table_csv(std::ostream& out, const SignificanceTable& table);
/// Aligned plain text: criteria rows, configuration columns.
void write_table_text(std::ostream& out, const SignificanceTable& table);

/// "gamma2" < "gamma10": digit runs compare numerically.
bool natural_less(const std::string& a, const std::string& b);

}  // namespace mofs
