#include "hmp/eps_series.hpp"

#include <utility>

#include "hmp/errors.hpp"

namespace hmp {

EpsSeries::EpsSeries(int order) {
  if (order < 0) throw invalid_input_error("series: negative order");
  coeffs_.resize(static_cast<size_t>(order) + 1);
}

EpsSeries::EpsSeries(int order, std::vector<LogLinearExpr> coeffs) : coeffs_(std::move(coeffs)) {
  if (static_cast<int>(coeffs_.size()) != order + 1) {
    throw invalid_input_error("series: coefficient count must be order + 1");
  }
}

EpsSeries EpsSeries::constant(int order, LogLinearExpr value) {
  EpsSeries s(order);
  s.coeffs_[0] = std::move(value);
  return s;
}

void EpsSeries::set_coeff(int power, LogLinearExpr value) {
  coeffs_.at(static_cast<size_t>(power)) = std::move(value);
}

bool EpsSeries::is_zero() const {
  for (const auto& c : coeffs_) {
    if (!c.is_zero()) return false;
  }
  return true;
}

EpsSeries EpsSeries::truncated(int order) const {
  EpsSeries out(order);
  const size_t n = std::min(coeffs_.size(), out.coeffs_.size());
  for (size_t i = 0; i < n; ++i) out.coeffs_[i] = coeffs_[i];
  return out;
}

EpsSeries EpsSeries::operator-() const {
  EpsSeries out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

EpsSeries EpsSeries::operator+(const EpsSeries& other) const {
  EpsSeries out = truncated(std::max(order(), other.order()));
  for (size_t i = 0; i < other.coeffs_.size(); ++i) out.coeffs_[i] += other.coeffs_[i];
  return out;
}

EpsSeries EpsSeries::operator-(const EpsSeries& other) const { return *this + (-other); }

EpsSeries& EpsSeries::operator+=(const EpsSeries& other) {
  *this = *this + other;
  return *this;
}

EpsSeries EpsSeries::scaled(const RationalFunction& factor) const {
  EpsSeries out = *this;
  for (auto& c : out.coeffs_) c = c.scaled(factor);
  return out;
}

EpsSeries EpsSeries::scaled(const BigRational& factor) const {
  return scaled(RationalFunction(factor));
}

double EpsSeries::eval(double p, double eps) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * eps + loglinear_eval(*it, p);
  }
  return acc;
}

namespace {

LogLinearExpr coeff_product(const LogLinearExpr& a, const LogLinearExpr& b) {
  if (a.is_pure_rational()) return b.scaled(a.c_const);
  if (b.is_pure_rational()) return a.scaled(b.c_const);
  throw ring_error("series: log x log coefficient product is outside the ring");
}

}  // namespace

EpsSeries series_multiply(const EpsSeries& a, const EpsSeries& b, int k) {
  EpsSeries out(k);
  for (int i = 0; i <= std::min(a.order(), k); ++i) {
    const LogLinearExpr& ai = a.coeff(i);
    if (ai.is_zero()) continue;
    for (int j = 0; j <= std::min(b.order(), k - i); ++j) {
      const LogLinearExpr& bj = b.coeff(j);
      if (bj.is_zero()) continue;
      out.set_coeff(i + j, out.coeff(i + j) + coeff_product(ai, bj));
    }
  }
  return out;
}

namespace {

// Splits a canonical rational function into 2^t p^x (1-p)^y; returns false
// when it has a different shape (or a non-positive sign).
bool monomial_split(const RationalFunction& f, long* t, int* x, int* y) {
  if (f.is_zero()) return false;
  Polynomial num = f.num();
  Polynomial den = f.den();
  const int px = num.trailing_zero_count();
  if (px > 0) num = num.divide_exact(Polynomial::monomial(BigRational(1), px));
  Polynomial num_core;
  const int qx = num.root_one_multiplicity(&num_core);
  const int py = den.trailing_zero_count();
  if (py > 0) den = den.divide_exact(Polynomial::monomial(BigRational(1), py));
  Polynomial den_core;
  const int qy = den.root_one_multiplicity(&den_core);
  if (!num_core.is_constant() || !den_core.is_constant()) return false;
  const BigRational c = num_core.constant_term() / den_core.constant_term();
  if (c <= 0) return false;
  long exp2 = 0;
  if (!is_power_of_two(c, &exp2)) return false;
  *t = exp2;
  *x = px - py;
  *y = qx - qy;
  return true;
}

}  // namespace

EpsSeries series_log(const EpsSeries& z, int k) {
  for (const auto& c : z.coeffs()) {
    if (!c.is_pure_rational()) {
      throw invalid_input_error("series_log: input coefficients must be pure rational");
    }
  }
  const RationalFunction& z0 = z.coeff(0).c_const;
  if (z0.is_zero()) {
    throw invalid_input_error("series_log: constant term is zero");
  }
  long log2_exp = 0;
  int pow_p = 0, pow_1mp = 0;
  if (!monomial_split(z0, &log2_exp, &pow_p, &pow_1mp)) {
    throw invalid_input_error(
        "series_log: constant term is not a positive monomial 2^t p^x (1-p)^y");
  }

  EpsSeries out(k);
  LogLinearExpr head;
  head.c_logp = RationalFunction(BigRational(pow_p));
  head.c_log1mp = RationalFunction(BigRational(pow_1mp));
  head.c_log2 = RationalFunction(BigRational(log2_exp));
  out.set_coeff(0, head);
  if (k == 0) return out;

  // u_i = z_i / z_0; log(1 + U) = sum_j (-1)^(j+1) U^j / j, truncated at k.
  std::vector<RationalFunction> u(static_cast<size_t>(k) + 1);
  bool u_zero = true;
  for (int i = 1; i <= std::min(z.order(), k); ++i) {
    u[static_cast<size_t>(i)] = z.coeff(i).c_const / z0;
    if (!u[static_cast<size_t>(i)].is_zero()) u_zero = false;
  }
  if (u_zero) return out;

  std::vector<RationalFunction> acc(static_cast<size_t>(k) + 1);
  std::vector<RationalFunction> power = u;  // U^1
  long sign = 1;
  for (int j = 1; j <= k; ++j) {
    const BigRational factor = make_rational(sign, j);
    for (int i = j; i <= k; ++i) {
      if (!power[static_cast<size_t>(i)].is_zero()) {
        acc[static_cast<size_t>(i)] += power[static_cast<size_t>(i)] * RationalFunction(factor);
      }
    }
    sign = -sign;
    if (j == k) break;
    // power <- power * U (truncated); U^j has no terms below eps^j.
    std::vector<RationalFunction> next(static_cast<size_t>(k) + 1);
    for (int i = j; i <= k - 1; ++i) {
      if (power[static_cast<size_t>(i)].is_zero()) continue;
      for (int m = 1; m + i <= k; ++m) {
        if (u[static_cast<size_t>(m)].is_zero()) continue;
        next[static_cast<size_t>(i + m)] +=
            power[static_cast<size_t>(i)] * u[static_cast<size_t>(m)];
      }
    }
    power = std::move(next);
  }
  for (int i = 1; i <= k; ++i) {
    if (!acc[static_cast<size_t>(i)].is_zero()) {
      out.set_coeff(i, LogLinearExpr::pure(acc[static_cast<size_t>(i)]));
    }
  }
  return out;
}

}  // namespace hmp
