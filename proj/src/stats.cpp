#include "dimetrics/stats.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace dimetrics::stats {

namespace {

constexpr double kTieEpsilon = 1e-12;
constexpr int kMaxIterations = 1000;
constexpr double kGammaEpsilon = 1e-16;

// P(a, x) by its power series; converges quickly for x < a + 1.
double gamma_p_series(double a, double x) {
  double term = 1.0 / a;
  double sum = term;
  for (int n = 1; n < kMaxIterations; ++n) {
    term *= x / (a + n);
    sum += term;
    if (std::fabs(term) < std::fabs(sum) * kGammaEpsilon) break;
  }
  return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

// Q(a, x) by modified Lentz evaluation of the continued fraction; for x >= a + 1.
double gamma_q_continued_fraction(double a, double x) {
  constexpr double tiny = std::numeric_limits<double>::min() / kGammaEpsilon;
  double b = x + 1.0 - a;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i < kMaxIterations; ++i) {
    double an = -i * (i - a);
    b += 2.0;
    d = an * d + b;
    if (std::fabs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::fabs(c) < tiny) c = tiny;
    d = 1.0 / d;
    double delta = d * c;
    h *= delta;
    if (std::fabs(delta - 1.0) < kGammaEpsilon) break;
  }
  return std::exp(-x + a * std::log(x) - std::lgamma(a)) * h;
}

std::string format_threshold(double t) {
  std::ostringstream out;
  out << t;
  return out.str();
}

}  // namespace

void RankMatrix::validate() const {
  if (treatments.size() < 2) throw std::invalid_argument("rank matrix needs at least 2 treatments");
  if (values.size() < 2) throw std::invalid_argument("rank matrix needs at least 2 blocks");
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i].size() != treatments.size())
      throw std::invalid_argument("rank matrix block " + std::to_string(i) + " is incomplete");
  }
}

RankMatrix split_by_threshold(std::span<const Observation> observations, double threshold, Boundary boundary,
                              std::vector<std::string>* warnings) {
  std::vector<Observation> low, high;
  for (const auto& o : observations) {
    bool equal = std::fabs(o.di_proportion - threshold) <= kTieEpsilon;
    if (equal) {
      if (boundary == Boundary::lower) low.push_back(o);
      if (boundary == Boundary::upper) high.push_back(o);
    } else if (o.di_proportion < threshold) {
      low.push_back(o);
    } else {
      high.push_back(o);
    }
  }
  if (low.size() < 2 || high.size() < 2)
    throw std::domain_error("threshold " + format_threshold(threshold) + " leaves " + std::to_string(low.size()) +
                            " 'No DI' and " + std::to_string(high.size()) + " 'DI' projects; need at least 2 each");

  auto by_di = [](const Observation& a, const Observation& b) { return a.di_proportion < b.di_proportion; };
  std::stable_sort(low.begin(), low.end(), by_di);
  std::stable_sort(high.begin(), high.end(), by_di);

  std::size_t n = std::min(low.size(), high.size());
  if (low.size() != high.size() && warnings)
    warnings->push_back("unequal group sizes (" + std::to_string(low.size()) + " vs " + std::to_string(high.size()) +
                        "); truncated to " + std::to_string(n) + " blocks");

  RankMatrix m;
  m.treatments = {"No DI", "DI"};
  for (std::size_t i = 0; i < n; ++i) m.values.push_back({low[i].score, high[i].score});
  return m;
}

std::vector<double> midranks(std::span<const double> row) {
  std::vector<std::size_t> order(row.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return row[a] < row[b]; });
  std::vector<double> ranks(row.size());
  std::size_t i = 0;
  while (i < order.size()) {
    std::size_t j = i;
    while (j + 1 < order.size() && std::fabs(row[order[j + 1]] - row[order[i]]) <= kTieEpsilon) ++j;
    double rank = (static_cast<double>(i + 1) + static_cast<double>(j + 1)) / 2.0;
    for (std::size_t t = i; t <= j; ++t) ranks[order[t]] = rank;
    i = j + 1;
  }
  return ranks;
}

std::vector<double> holm_adjust(std::span<const double> p_values) {
  const std::size_t m = p_values.size();
  std::vector<std::size_t> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return p_values[a] < p_values[b]; });
  std::vector<double> adjusted(m);
  double running = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    double scaled = std::min(1.0, static_cast<double>(m - i) * p_values[order[i]]);
    running = std::max(running, scaled);
    adjusted[order[i]] = running;
  }
  return adjusted;
}

FriedmanResult friedman_test(const RankMatrix& matrix, double alpha) {
  matrix.validate();
  const std::size_t k = matrix.treatments.size();
  const std::size_t n = matrix.blocks();
  const auto kd = static_cast<double>(k);
  const auto nd = static_cast<double>(n);

  FriedmanResult r;
  r.rank_sums.assign(k, 0.0);
  for (const auto& row : matrix.values) {
    auto ranks = midranks(row);
    for (std::size_t j = 0; j < k; ++j) r.rank_sums[j] += ranks[j];
  }
  double sum_sq = 0.0;
  for (double s : r.rank_sums) sum_sq += s * s;
  r.chi_square = std::max(0.0, 12.0 / (nd * kd * (kd + 1.0)) * sum_sq - 3.0 * nd * (kd + 1.0));
  // Cancellation leaves rounding residue when all rank sums are equal.
  if (r.chi_square < 1e-9) r.chi_square = 0.0;
  r.df = static_cast<int>(k) - 1;
  r.p_value = chi_square_upper_tail(r.chi_square, r.df);
  r.rejected = r.p_value < alpha;

  for (double s : r.rank_sums) r.mean_ranks.push_back(s / nd);

  const double se = std::sqrt(kd * (kd + 1.0) / (6.0 * nd));
  std::vector<double> raw;
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = a + 1; b < k; ++b) {
      PairwiseComparison c;
      c.first = a;
      c.second = b;
      c.z = (r.mean_ranks[a] - r.mean_ranks[b]) / se;
      c.p_raw = normal_two_sided(c.z);
      raw.push_back(c.p_raw);
      r.pairwise.push_back(c);
    }
  }
  auto adjusted = holm_adjust(raw);
  for (std::size_t i = 0; i < r.pairwise.size(); ++i) {
    r.pairwise[i].p_holm = adjusted[i];
    r.pairwise[i].rejected = adjusted[i] < alpha;
  }
  return r;
}

double regularized_gamma_q(double a, double x) {
  if (!(a > 0.0) || !(x >= 0.0)) throw std::invalid_argument("regularized_gamma_q requires a > 0 and x >= 0");
  if (x == 0.0) return 1.0;
  if (x < a + 1.0) return std::clamp(1.0 - gamma_p_series(a, x), 0.0, 1.0);
  return std::clamp(gamma_q_continued_fraction(a, x), 0.0, 1.0);
}

double chi_square_upper_tail(double x, int df) {
  if (df <= 0) throw std::invalid_argument("chi-square degrees of freedom must be positive, got " + std::to_string(df));
  if (!(x >= 0.0)) throw std::invalid_argument("chi-square statistic must be nonnegative");
  return regularized_gamma_q(0.5 * df, 0.5 * x);
}

double normal_two_sided(double z) { return std::erfc(std::fabs(z) / std::sqrt(2.0)); }

}  // namespace dimetrics::stats
