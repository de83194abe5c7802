#include "dimetrics/maintainability.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace dimetrics::maintainability {

double normalize_complexity(double x) {
  if (!(x >= 0.0)) throw std::invalid_argument("complexity must be nonnegative, got " + std::to_string(x));
  return 1.0 - 1.0 / (1.0 + x);
}

double normalize_lcom(double x) {
  if (!(x > 0.0)) return 0.0;
  return std::min(1.0, 1.0 / x);
}

MaintainabilityScores compute_scores(const metrics::ProjectMetrics& m) {
  MaintainabilityScores s;
  s.ncbo = normalize_complexity(m.mean_cbo);
  s.nrfc = normalize_complexity(m.mean_rfc);
  s.ndcbo = normalize_complexity(m.mean_dcbo);
  s.nlcom = normalize_lcom(m.mean_lcom);
  s.mai = 1.0 - s.ncbo / 3.0 - s.nlcom / 3.0 - s.nrfc / 3.0;
  s.dmai = 1.0 - s.ndcbo / 3.0 - s.nlcom / 3.0 - s.nrfc / 3.0;
  return s;
}

}  // namespace dimetrics::maintainability
