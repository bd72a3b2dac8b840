#pragma once

#include <vector>

#include "hmp/loglinear.hpp"

namespace hmp {

// Truncated power series in the noise parameter eps with LogLinearExpr
// coefficients; coeffs[i] multiplies eps^i and coeffs.size() == order + 1.
class EpsSeries {
 public:
  explicit EpsSeries(int order);
  EpsSeries(int order, std::vector<LogLinearExpr> coeffs);

  static EpsSeries zero(int order) { return EpsSeries(order); }
  static EpsSeries constant(int order, LogLinearExpr value);

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<LogLinearExpr>& coeffs() const { return coeffs_; }
  const LogLinearExpr& coeff(int power) const { return coeffs_.at(static_cast<size_t>(power)); }
  void set_coeff(int power, LogLinearExpr value);

  bool is_zero() const;

  // Truncate or zero-pad to the given order.
  EpsSeries truncated(int order) const;

  EpsSeries operator-() const;
  EpsSeries operator+(const EpsSeries& other) const;  // padded to max order
  EpsSeries operator-(const EpsSeries& other) const;
  EpsSeries& operator+=(const EpsSeries& other);
  EpsSeries scaled(const RationalFunction& factor) const;
  EpsSeries scaled(const BigRational& factor) const;

  bool operator==(const EpsSeries& other) const { return coeffs_ == other.coeffs_; }

  // sum_i coeff_i(p) eps^i as a double.
  double eval(double p, double eps) const;

 private:
  std::vector<LogLinearExpr> coeffs_;
};

// Cauchy product truncated at order k. At most one factor may carry log
// terms in any contributing coefficient pair; a log x log product throws
// ring_error (it cannot arise in the entropy expansion, so hitting it
// means a logic bug upstream).
EpsSeries series_multiply(const EpsSeries& a, const EpsSeries& b, int k);

// log of a series whose constant term is the monomial
// 2^t * p^x * (1-p)^y (t, x, y integers; detected from the canonical
// form of the constant coefficient). Returns
//   [t log 2 + x log p + y log(1-p)]  +  Taylor part of log(1 + sum u_i eps^i)
// truncated at order k; all non-constant output coefficients are pure
// rational. Throws invalid_input_error when the constant term is zero or
// not a monomial of that shape, or when any input coefficient carries logs.
EpsSeries series_log(const EpsSeries& z, int k);

}  // namespace hmp
