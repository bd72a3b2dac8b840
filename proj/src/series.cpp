#include "hmp/series.hpp"

#include <Eigen/Dense>
#include <cmath>

#include "hmp/errors.hpp"

namespace hmp {

bool divergence_heuristic(const std::vector<double>& terms) {
  const size_t n = terms.size();
  if (n < 3) return false;
  const double t0 = std::abs(terms[n - 3]);
  const double t1 = std::abs(terms[n - 2]);
  const double t2 = std::abs(terms[n - 1]);
  return t2 > t1 && t1 > t0;
}

SeriesEval entropy_series(double p, double eps, int k_max, const CoefficientTable& table) {
  if (k_max < 0 || k_max > CoefficientTable::max_order) {
    throw unsupported_order_error("entropy_series: order must lie in 0..11");
  }
  if (!(eps >= 0.0)) throw invalid_input_error("entropy_series: eps must be non-negative");
  SeriesEval out;
  out.terms.reserve(static_cast<size_t>(k_max) + 1);
  double eps_pow = 1.0;
  double sum = 0.0;
  for (int k = 0; k <= k_max; ++k) {
    const double term = coefficient(k, p, table) * eps_pow;
    out.terms.push_back(term);
    sum += term;
    eps_pow *= eps;
  }
  out.value = sum;
  out.divergence_flag = divergence_heuristic(out.terms);
  return out;
}

double iid_entropy(double p, double eps) {
  if (!(p >= 0.0 && p <= 1.0) || !(eps >= 0.0 && eps <= 1.0)) {
    throw invalid_input_error("iid_entropy: p and eps must lie in [0, 1]");
  }
  const double x = p * (1.0 - eps) + eps * (1.0 - p);
  const auto xlx = [](double v) { return v > 0.0 ? v * std::log(v) : 0.0; };
  return -(xlx(x) + xlx(1.0 - x));
}

double iid_coefficient(int k, double p) {
  if (!(p > 0.0 && p <= 0.5)) {
    throw invalid_input_error("iid_coefficient: p must lie in (0, 1/2]");
  }
  if (k < 0) throw invalid_input_error("iid_coefficient: negative order");
  if (k == 0) return -(p * std::log(p) + (1.0 - p) * std::log1p(-p));
  if (k == 1) return (1.0 - 2.0 * p) * std::log((1.0 - p) / p);
  // k-th Taylor coefficient of h_b(p + (1-2p) eps):
  //   -[ (1-2p)^k/(1-p)^(k-1) + (2p-1)^k/p^(k-1) ] / (k(k-1)),
  // written with ratio powers so large k stays finite.
  const double first = p * std::pow((2.0 * p - 1.0) / p, k);
  const double second = (1.0 - p) * std::pow((1.0 - 2.0 * p) / (1.0 - p), k);
  return -(first + second) / (static_cast<double>(k) * static_cast<double>(k - 1));
}

double iid_radius_exact(double p) {
  if (!(p > 0.0 && p < 0.5)) {
    throw invalid_input_error("iid_radius_exact: p must lie strictly inside (0, 1/2)");
  }
  return p / (1.0 - 2.0 * p);
}

double RadiusFit::radius() const { return std::abs(a); }

RadiusFit radius_estimate(const std::vector<double>& coefficients, int k_min, int k_max) {
  if (k_min < 0 || k_max <= k_min ||
      k_max >= static_cast<int>(coefficients.size())) {
    throw invalid_input_error("radius_estimate: bad order range");
  }
  const int n_ratios = k_max - k_min;
  if (n_ratios < 4) {
    throw invalid_input_error("radius_estimate: at least 4 ratios required");
  }
  for (int k = k_min; k <= k_max; ++k) {
    if (coefficients[static_cast<size_t>(k)] == 0.0) {
      throw degenerate_ratio_error("radius_estimate: zero coefficient inside fit range");
    }
  }
  // ratio_k (k + c) = a k + b, rearranged to the linear system
  // a k + b - c ratio_k = k ratio_k in the unknowns (a, b, c).
  Eigen::MatrixXd design(n_ratios, 3);
  Eigen::VectorXd rhs(n_ratios);
  std::vector<double> ratios(static_cast<size_t>(n_ratios));
  for (int i = 0; i < n_ratios; ++i) {
    const int k = k_min + i;
    const double ratio = coefficients[static_cast<size_t>(k)] /
                         coefficients[static_cast<size_t>(k) + 1];
    ratios[static_cast<size_t>(i)] = ratio;
    design(i, 0) = static_cast<double>(k);
    design(i, 1) = 1.0;
    design(i, 2) = -ratio;
    rhs(i) = static_cast<double>(k) * ratio;
  }
  const Eigen::VectorXd sol = design.bdcSvd(Eigen::ComputeThinU | Eigen::ComputeThinV).solve(rhs);
  RadiusFit fit;
  fit.a = sol(0);
  fit.b = sol(1);
  fit.c = sol(2);
  fit.k_min = k_min;
  fit.k_max = k_max;
  if (!std::isfinite(fit.a) || !std::isfinite(fit.b) || !std::isfinite(fit.c)) {
    throw no_convergence_error("radius_estimate: fit did not produce finite parameters");
  }
  double ss = 0.0;
  for (int i = 0; i < n_ratios; ++i) {
    const int k = k_min + i;
    const double denom = static_cast<double>(k) + fit.c;
    if (denom == 0.0) {
      throw no_convergence_error("radius_estimate: fitted pole inside the order range");
    }
    const double predicted = (fit.a * k + fit.b) / denom;
    const double err = predicted - ratios[static_cast<size_t>(i)];
    ss += err * err;
  }
  fit.residual = std::sqrt(ss / n_ratios);
  return fit;
}

}  // namespace hmp
