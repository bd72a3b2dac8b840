#pragma once

#include <vector>

#include "hmp/series_table.hpp"

namespace hmp {

struct SeriesEval {
  double value = 0.0;          // partial sum through the requested order
  std::vector<double> terms;   // H^(k)(p) eps^k for k = 0..order
  bool divergence_flag = false;
};

// Partial sum of the entropy series at (p, eps) through order k_max <= 11.
// The divergence flag is a crude advisory: it trips when the last three
// term magnitudes grow monotonically.
SeriesEval entropy_series(double p, double eps, int k_max,
                          const CoefficientTable& table = coefficient_table());

// Growth test used for the flag, exposed for per-row reporting.
bool divergence_heuristic(const std::vector<double>& terms);

// Entropy rate of the memoryless comparison model: h_b of the convolved
// flip probability p(1-eps) + eps(1-p).
double iid_entropy(double p, double eps);

// Series coefficient of the i.i.d. model. k = 0 and 1 take the explicit
// low-order forms; k >= 2 is the closed bracket
//   [ ((2p-1)/p)^k + (1-p) ((1-2p)/(1-p))^k ] / (k (k-1)),
// computed with ratio powers so large k stays finite. Requires 0 < p < 1/2.
double iid_coefficient(int k, double p);

// Exact radius of convergence of the i.i.d. series: p / (1-2p), 0 < p < 1/2.
double iid_radius_exact(double p);

// Least-squares fit of consecutive-coefficient ratios to (a k + b)/(k + c).
struct RadiusFit {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  double residual = 0.0;  // RMS misfit of the ratios
  int k_min = 0;
  int k_max = 0;
  // The singularity generally sits at negative eps, so the fitted a is
  // negative; its magnitude estimates the radius of convergence.
  double radius() const;
};

// coefficients[k] = H^(k); ratios H^(k)/H^(k+1) for k in [k_min, k_max-1]
// are fitted. Needs at least 4 ratios and no zero coefficient in range.
RadiusFit radius_estimate(const std::vector<double>& coefficients, int k_min, int k_max);

}  // namespace hmp
