#pragma once

#include <array>
#include <vector>

#include "hmp/loglinear.hpp"

namespace hmp {

// One tabulated entropy-series coefficient for order k >= 3, stored in the
// lambda = 1 - 2p variable:
//
//   H^(k) = scale * lambda^lambda_power * sum_j coeffs[j] lambda^(2j)
//           / (1 - lambda^2)^(2(k-1))
//
// Only even powers of lambda appear in the numerator.
struct LambdaForm {
  int k = 0;
  long long scale_num = 0;
  long long scale_den = 1;
  int lambda_power = 0;
  std::vector<long long> coeffs;  // over powers of lambda^2

  int denom_power() const { return 2 * (k - 1); }
};

// Closed-form entropy-series coefficients H^(0)..H^(11): symbolic
// log-linear expressions for k <= 2, lambda-form integer data above for
// k >= 3.
struct CoefficientTable {
  std::array<LogLinearExpr, 3> closed;     // k = 0, 1, 2
  std::array<LambdaForm, 9> lambda_forms;  // k = 3..11

  static constexpr int max_order = 11;

  const LambdaForm& form(int k) const { return lambda_forms.at(static_cast<size_t>(k - 3)); }
};

const CoefficientTable& coefficient_table();

// H^(k)(p) in nats. k <= 2 needs 0 < p < 1 (log terms); k >= 3 needs
// 0 < p < 1 as well (denominator poles at the endpoints). k > 11 raises
// unsupported_order_error.
double coefficient(int k, double p, const CoefficientTable& table = coefficient_table());

// Exact form of H^(k): the symbolic expression for k <= 2, the lambda
// form converted to a rational function of p for k >= 3.
LogLinearExpr coefficient_exact(int k, const CoefficientTable& table = coefficient_table());

}  // namespace hmp
