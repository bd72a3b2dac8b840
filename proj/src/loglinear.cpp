#include "hmp/loglinear.hpp"

#include <cmath>
#include <sstream>

#include "hmp/errors.hpp"

namespace hmp {

LogLinearExpr LogLinearExpr::operator-() const {
  return {-c_const, -c_logp, -c_log1mp, -c_log2};
}

LogLinearExpr LogLinearExpr::operator+(const LogLinearExpr& other) const {
  return {c_const + other.c_const, c_logp + other.c_logp,
          c_log1mp + other.c_log1mp, c_log2 + other.c_log2};
}

LogLinearExpr LogLinearExpr::operator-(const LogLinearExpr& other) const {
  return *this + (-other);
}

LogLinearExpr& LogLinearExpr::operator+=(const LogLinearExpr& other) {
  c_const += other.c_const;
  c_logp += other.c_logp;
  c_log1mp += other.c_log1mp;
  c_log2 += other.c_log2;
  return *this;
}

LogLinearExpr& LogLinearExpr::operator-=(const LogLinearExpr& other) {
  return *this += -other;
}

LogLinearExpr LogLinearExpr::scaled(const RationalFunction& factor) const {
  return {c_const * factor, c_logp * factor, c_log1mp * factor, c_log2 * factor};
}

bool LogLinearExpr::operator==(const LogLinearExpr& other) const {
  return c_const == other.c_const && c_logp == other.c_logp &&
         c_log1mp == other.c_log1mp && c_log2 == other.c_log2;
}

std::string LogLinearExpr::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  const auto emit = [&](const RationalFunction& c, const char* basis) {
    if (c.is_zero()) return;
    if (!first) out << " + ";
    first = false;
    const std::string text = c.to_string(var);
    if (basis[0] == '\0') {
      out << text;
      return;
    }
    if (text.find(' ') != std::string::npos) {
      out << "(" << text << ")";
    } else {
      out << text;
    }
    out << "*" << basis;
  };
  emit(c_const, "");
  emit(c_logp, ("log(" + var + ")").c_str());
  emit(c_log1mp, ("log(1-" + var + ")").c_str());
  emit(c_log2, "log(2)");
  return out.str();
}

bool loglinear_equal(const LogLinearExpr& a, const LogLinearExpr& b) {
  return ratfunc_equal(a.c_const, b.c_const) && ratfunc_equal(a.c_logp, b.c_logp) &&
         ratfunc_equal(a.c_log1mp, b.c_log1mp) && ratfunc_equal(a.c_log2, b.c_log2);
}

double loglinear_eval(const LogLinearExpr& e, double p) {
  if (!(p > 0.0 && p < 1.0)) {
    throw invalid_input_error("loglinear_eval: p must lie strictly inside (0,1)");
  }
  double value = 0.0;
  if (!e.c_const.is_zero()) value += e.c_const.eval(p);
  if (!e.c_logp.is_zero()) value += e.c_logp.eval(p) * std::log(p);
  if (!e.c_log1mp.is_zero()) value += e.c_log1mp.eval(p) * std::log1p(-p);
  if (!e.c_log2.is_zero()) value += e.c_log2.eval(p) * std::log(2.0);
  return value;
}

}  // namespace hmp
