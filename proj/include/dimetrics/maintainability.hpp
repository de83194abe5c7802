#pragma once

#include "dimetrics/metrics.hpp"

namespace dimetrics::maintainability {

struct MaintainabilityScores {
  double ncbo = 0.0;
  double nrfc = 0.0;
  double nlcom = 0.0;
  double ndcbo = 0.0;
  double mai = 1.0;
  double dmai = 1.0;
};

// 1 - 1/(1 + x). Throws std::invalid_argument for negative input.
double normalize_complexity(double x);

// 1/x clamped to 1, or 0 at x = 0.
double normalize_lcom(double x);

/// Normalizes the project means, then evaluates MAI and DMAI.
MaintainabilityScores compute_scores(const metrics::ProjectMetrics& metrics);

}  // namespace dimetrics::maintainability
