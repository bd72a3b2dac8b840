#include "hmp/series_table.hpp"

#include <cmath>

#include "hmp/errors.hpp"

namespace hmp {

namespace {

// H^(0) = -p log p - (1-p) log(1-p)
LogLinearExpr closed_h0() {
  LogLinearExpr e;
  e.c_logp = RationalFunction(Polynomial({0, -1}));
  e.c_log1mp = RationalFunction(Polynomial({-1, 1}));
  return e;
}

// H^(1) = 2 (1-2p) [log(1-p) - log p]
LogLinearExpr closed_h1() {
  LogLinearExpr e;
  e.c_logp = RationalFunction(Polynomial({-2, 4}));
  e.c_log1mp = RationalFunction(Polynomial({2, -4}));
  return e;
}

// H^(2) = -2 (1-2p) [log(1-p) - log p] - (1-2p)^2 / (2 p^2 (1-p)^2)
LogLinearExpr closed_h2() {
  LogLinearExpr e;
  e.c_logp = RationalFunction(Polynomial({2, -4}));
  e.c_log1mp = RationalFunction(Polynomial({-2, 4}));
  const Polynomial one_minus_2p({1, -2});
  const Polynomial den = Polynomial({0, 1}).pow(2) * Polynomial({1, -1}).pow(2);
  e.c_const = RationalFunction(-(one_minus_2p * one_minus_2p), den.scaled(BigRational(2)));
  return e;
}

CoefficientTable build_table() {
  CoefficientTable t;
  t.closed = {closed_h0(), closed_h1(), closed_h2()};
  t.lambda_forms = {{
      {3, -16, 3, 2, {-3, -10, 5}},
      {4, 8, 3, 2, {-3, -140, -114, 20, 109}},
      {5, -128, 15, 4, {-100, -769, -708, 762, 336, 95}},
      {6, 128, 15, 4, {-115, -4001, -17995, -7825, 16511, 9525, -321, 125}},
      {7, -256, 105, 4,
       {-245, -37296, -524588, -1470296, -270014, 1628568, 666580, -110888, -45941, 280}},
      {8, 64, 21, 4,
       {-49, -48286, -1872317, -14556080, -29072946, 3658284, 35666574, 12116328, -5222301,
        -2072958, -169169, 56}},
      {9, 2048, 63, 6,
       {4683, 495993, 8950625, 46641379, 67137630, -30319318, -97554574, -23482698, 20135431,
        8819501, 968829, 37527}},
      {10, -2048, 45, 6,
       {2187, 684129, 26886370, 296483526, 1120170657, 1173787011, -1054659252, -2068579420,
        -326987427, 571835031, 243826482, 31894966, 1394199, 38757}},
      {11, 8192, 495, 6,
       {2277, 2569380, 217466315, 4673872550, 35567469125, 102982107048, 74948247123,
        -120533821070, -173686662185, -11635283900, 59810870313, 25070557898, 3095961215,
        92425520, -1899975, 98142}},
  }};
  return t;
}

}  // namespace

const CoefficientTable& coefficient_table() {
  static const CoefficientTable table = build_table();
  return table;
}

double coefficient(int k, double p, const CoefficientTable& table) {
  if (k < 0 || k > CoefficientTable::max_order) {
    throw unsupported_order_error("coefficient: order must lie in 0..11");
  }
  if (!(p > 0.0 && p < 1.0)) {
    throw invalid_input_error("coefficient: p must lie strictly inside (0, 1)");
  }
  if (k <= 2) return loglinear_eval(table.closed[static_cast<size_t>(k)], p);
  const LambdaForm& f = table.form(k);
  const double lambda = 1.0 - 2.0 * p;
  const double lambda_sq = lambda * lambda;
  double num = 0.0;
  for (auto it = f.coeffs.rbegin(); it != f.coeffs.rend(); ++it) {
    num = num * lambda_sq + static_cast<double>(*it);
  }
  num *= std::pow(lambda, f.lambda_power);
  const double den = std::pow(1.0 - lambda_sq, f.denom_power());
  return static_cast<double>(f.scale_num) / static_cast<double>(f.scale_den) * num / den;
}

LogLinearExpr coefficient_exact(int k, const CoefficientTable& table) {
  if (k < 0 || k > CoefficientTable::max_order) {
    throw unsupported_order_error("coefficient_exact: order must lie in 0..11");
  }
  if (k <= 2) return table.closed[static_cast<size_t>(k)];
  const LambdaForm& f = table.form(k);
  return LogLinearExpr::pure(lambda_form_to_p(
      f.coeffs, f.lambda_power, make_rational(f.scale_num, f.scale_den), f.denom_power()));
}

}  // namespace hmp
