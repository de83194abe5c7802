#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace dimetrics::stats {

enum class Boundary { exclude, lower, upper };

struct Observation {
  double di_proportion = 0.0;
  double score = 0.0;
};

/// n blocks (rows) by k treatments (columns).
struct RankMatrix {
  std::vector<std::string> treatments;
  std::vector<std::vector<double>> values;

  std::size_t blocks() const { return values.size(); }
  /// Throws std::invalid_argument unless n >= 2, k >= 2 and every row has k cells.
  void validate() const;
};

/// Splits into "No DI" (below threshold) and "DI" (above). Values equal to the threshold
/// are dropped (exclude), sent to "No DI" (lower) or to "DI" (upper). Each group is sorted
/// by DI proportion and paired positionally; the longer group is truncated with a warning.
/// Throws std::domain_error when either side has fewer than two members.
RankMatrix split_by_threshold(std::span<const Observation> observations, double threshold, Boundary boundary,
                              std::vector<std::string>* warnings = nullptr);

struct PairwiseComparison {
  std::size_t first = 0;
  std::size_t second = 0;
  double z = 0.0;
  double p_raw = 1.0;
  double p_holm = 1.0;
  bool rejected = false;
};

struct FriedmanResult {
  double chi_square = 0.0;
  int df = 0;
  double p_value = 1.0;
  std::vector<double> rank_sums;
  std::vector<double> mean_ranks;
  std::vector<PairwiseComparison> pairwise;
  bool rejected = false;  // p_value < alpha
};

/// Within-block midranks; chi-square without tie correction; pairwise z tests on mean
/// rank differences with standard error sqrt(k(k+1)/(6n)), Holm-adjusted.
FriedmanResult friedman_test(const RankMatrix& matrix, double alpha = 0.05);

/// Holm step-down adjustment, returned in input order.
std::vector<double> holm_adjust(std::span<const double> p_values);

/// Ranks with ties sharing the average of the positions they span (1-based).
std::vector<double> midranks(std::span<const double> row);

/// Regularized upper incomplete gamma Q(a, x).
double regularized_gamma_q(double a, double x);

/// P(X > x) for X ~ chi-square(df). Throws std::invalid_argument if df <= 0 or x < 0.
double chi_square_upper_tail(double x, int df);

/// Two-sided standard normal tail, P(|Z| > |z|).
double normal_two_sided(double z);

}  // namespace dimetrics::stats
