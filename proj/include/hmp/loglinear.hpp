#pragma once

#include <string>

#include "hmp/ratfunc.hpp"

namespace hmp {

// Exact expression
//   c_const + c_logp * log(p) + c_log1mp * log(1-p) + c_log2 * log(2)
// with rational-function coefficients. This basis is closed under the
// entropy expansion: every log comes from log of the monomial
// (1/2) (1-p)^a p^b. Natural logarithm throughout.
struct LogLinearExpr {
  RationalFunction c_const;
  RationalFunction c_logp;
  RationalFunction c_log1mp;
  RationalFunction c_log2;

  static LogLinearExpr zero() { return {}; }
  static LogLinearExpr pure(RationalFunction value) {
    LogLinearExpr e;
    e.c_const = std::move(value);
    return e;
  }

  bool is_zero() const {
    return c_const.is_zero() && c_logp.is_zero() && c_log1mp.is_zero() && c_log2.is_zero();
  }
  bool is_pure_rational() const {
    return c_logp.is_zero() && c_log1mp.is_zero() && c_log2.is_zero();
  }

  LogLinearExpr operator-() const;
  LogLinearExpr operator+(const LogLinearExpr& other) const;
  LogLinearExpr operator-(const LogLinearExpr& other) const;
  LogLinearExpr& operator+=(const LogLinearExpr& other);
  LogLinearExpr& operator-=(const LogLinearExpr& other);
  // Multiply by a pure rational factor.
  LogLinearExpr scaled(const RationalFunction& factor) const;

  bool operator==(const LogLinearExpr& other) const;
  bool operator!=(const LogLinearExpr& other) const { return !(*this == other); }

  std::string to_string(const std::string& var = "p") const;
};

// Value equality by cross-multiplication, independent of representation.
bool loglinear_equal(const LogLinearExpr& a, const LogLinearExpr& b);

// c_const(p) + c_logp(p) ln p + c_log1mp(p) ln(1-p) + c_log2(p) ln 2.
// Requires 0 < p < 1; throws evaluation_pole_error at coefficient poles.
double loglinear_eval(const LogLinearExpr& e, double p);

}  // namespace hmp
