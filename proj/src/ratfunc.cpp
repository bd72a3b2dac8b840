#include "hmp/ratfunc.hpp"

#include <utility>

#include "hmp/errors.hpp"

namespace hmp {

namespace {

// Joint scaling: both polynomials get integer coefficients with joint
// content 1; the denominator keeps a positive leading coefficient.
void make_joint_primitive(Polynomial& num, Polynomial& den) {
  BigInt den_lcm(1);
  for (const auto& c : num.coeffs()) {
    if (c != 0) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  }
  for (const auto& c : den.coeffs()) {
    if (c != 0) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  }
  if (den_lcm != 1) {
    num = num.scaled(BigRational(den_lcm));
    den = den.scaled(BigRational(den_lcm));
  }
  BigInt g(0);
  for (const auto& c : num.coeffs()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num_mpz_t());
  for (const auto& c : den.coeffs()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num_mpz_t());
  if (den.leading() < 0) g = -g;
  if (g != 1) {
    const BigRational inv = make_rational(BigInt(1), g);
    num = num.scaled(inv);
    den = den.scaled(inv);
  }
}

// Full canonicalization. Common powers of p and of (1-p) come off first;
// for the expansion workload denominators are monomials in p and 1-p, so
// the general gcd usually sees a constant on one side and is skipped.
void normalize_into(Polynomial& num, Polynomial& den) {
  const int p_common = std::min(num.trailing_zero_count(), den.trailing_zero_count());
  if (p_common > 0) {
    const Polynomial mono = Polynomial::monomial(BigRational(1), p_common);
    num = num.divide_exact(mono);
    den = den.divide_exact(mono);
  }
  Polynomial num_red, den_red;
  const int q_common = std::min(num.root_one_multiplicity(&num_red),
                                den.root_one_multiplicity(&den_red));
  if (q_common > 0) {
    const Polynomial back = Polynomial::one_minus_x_pow(q_common);
    num = num.divide_exact(back);
    den = den.divide_exact(back);
  }
  if (!num.is_constant() && !den.is_constant()) {
    const Polynomial g = poly_gcd(num, den);
    if (g.degree() > 0) {
      num = num.divide_exact(g);
      den = den.divide_exact(g);
    }
  }
  make_joint_primitive(num, den);
}

}  // namespace

RationalFunction::RationalFunction(Polynomial num, Polynomial den) {
  if (den.is_zero()) {
    throw invalid_input_error("rational function: zero denominator");
  }
  if (num.is_zero()) {
    num_ = Polynomial();
    den_ = Polynomial::one();
    return;
  }
  num_ = std::move(num);
  den_ = std::move(den);
  if (den_.is_constant()) {
    make_joint_primitive(num_, den_);
  } else {
    normalize_into(num_, den_);
  }
}

RationalFunction ratfunc_normalize(const Polynomial& num, const Polynomial& den) {
  return RationalFunction(num, den);
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction out;
  out.num_ = -num_;
  out.den_ = den_;
  return out;
}

RationalFunction RationalFunction::operator+(const RationalFunction& other) const {
  if (is_zero()) return other;
  if (other.is_zero()) return *this;
  if (den_ == other.den_) {
    return RationalFunction(num_ + other.num_, den_);
  }
  return RationalFunction(num_ * other.den_ + other.num_ * den_, den_ * other.den_);
}

RationalFunction RationalFunction::operator-(const RationalFunction& other) const {
  return *this + (-other);
}

RationalFunction RationalFunction::operator*(const RationalFunction& other) const {
  if (is_zero() || other.is_zero()) return RationalFunction();
  return RationalFunction(num_ * other.num_, den_ * other.den_);
}

RationalFunction RationalFunction::operator/(const RationalFunction& other) const {
  if (other.is_zero()) throw invalid_input_error("rational function: division by zero");
  if (is_zero()) return RationalFunction();
  return RationalFunction(num_ * other.den_, den_ * other.num_);
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& other) {
  *this = *this + other;
  return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& other) {
  *this = *this - other;
  return *this;
}

RationalFunction& RationalFunction::operator*=(const RationalFunction& other) {
  *this = *this * other;
  return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& other) {
  *this = *this / other;
  return *this;
}

BigRational RationalFunction::eval(const BigRational& x) const {
  const BigRational d = den_.eval(x);
  if (d == 0) {
    throw evaluation_pole_error("rational function: pole at " + hmp::to_string(x));
  }
  return num_.eval(x) / d;
}

double RationalFunction::eval(double x) const {
  const double d = den_.eval(x);
  if (d == 0.0) {
    throw evaluation_pole_error("rational function: pole");
  }
  return num_.eval(x) / d;
}

std::string RationalFunction::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  if (is_polynomial() && den_.leading() == 1) return num_.to_string(var);
  return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
}

bool ratfunc_equal(const RationalFunction& a, const RationalFunction& b) {
  return a.num() * b.den() == b.num() * a.den();
}

RationalFunction lambda_form_to_p(const std::vector<long long>& num_coeffs,
                                  int lambda_power, const BigRational& scale,
                                  int denom_power) {
  // lambda = 1 - 2p
  const Polynomial lambda({1, -2});
  const Polynomial lambda_sq = lambda * lambda;
  Polynomial num;
  Polynomial power = Polynomial::one();
  for (size_t j = 0; j < num_coeffs.size(); ++j) {
    if (num_coeffs[j] != 0) {
      num += power.scaled(BigRational(static_cast<long>(num_coeffs[j])));
    }
    if (j + 1 < num_coeffs.size()) power *= lambda_sq;
  }
  num *= lambda.pow(lambda_power);
  num = num.scaled(scale);
  // 1 - lambda^2 = 4p(1-p)
  const Polynomial den = Polynomial({0, 4, -4}).pow(denom_power);
  return RationalFunction(std::move(num), den);
}

}  // namespace hmp
