#pragma once

#include <string>
#include <vector>

#include "hmp/polynomial.hpp"

namespace hmp {

// Rational function num/den of the chain parameter p, kept in canonical
// form: num/den reduced, both with integer coefficients, joint content 1,
// and positive leading denominator coefficient. Canonical means equal
// values compare equal componentwise.
class RationalFunction {
 public:
  RationalFunction() : num_(), den_(Polynomial::one()) {}
  RationalFunction(long value) : RationalFunction(Polynomial(BigRational(value)), Polynomial::one()) {}
  explicit RationalFunction(const BigRational& value)
      : RationalFunction(Polynomial(value), Polynomial::one()) {}
  explicit RationalFunction(Polynomial num)
      : RationalFunction(std::move(num), Polynomial::one()) {}
  RationalFunction(Polynomial num, Polynomial den);

  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_constant(); }

  RationalFunction operator-() const;
  RationalFunction operator+(const RationalFunction& other) const;
  RationalFunction operator-(const RationalFunction& other) const;
  RationalFunction operator*(const RationalFunction& other) const;
  RationalFunction operator/(const RationalFunction& other) const;
  RationalFunction& operator+=(const RationalFunction& other);
  RationalFunction& operator-=(const RationalFunction& other);
  RationalFunction& operator*=(const RationalFunction& other);
  RationalFunction& operator/=(const RationalFunction& other);

  // Canonical representation makes this a value identity check.
  bool operator==(const RationalFunction& other) const {
    return num_ == other.num_ && den_ == other.den_;
  }
  bool operator!=(const RationalFunction& other) const { return !(*this == other); }

  BigRational eval(const BigRational& x) const;  // evaluation_pole_error at a pole
  double eval(double x) const;

  std::string to_string(const std::string& var = "p") const;

 private:
  Polynomial num_;
  Polynomial den_;
};

// Canonical form of f (already maintained by the class; exposed for the
// normalization contract and for re-normalizing hand-built values).
RationalFunction ratfunc_normalize(const Polynomial& num, const Polynomial& den);
inline RationalFunction ratfunc_normalize(const RationalFunction& f) {
  return ratfunc_normalize(f.num(), f.den());
}

// a.num * b.den == b.num * a.den, without normalizing.
bool ratfunc_equal(const RationalFunction& a, const RationalFunction& b);

// Builds the rational function of p described in the lambda variable
// lambda = 1 - 2p:
//
//   scale * lambda^lambda_power * sum_j num_coeffs[j] lambda^(2j)
//   -----------------------------------------------------------
//                      (1 - lambda^2)^denom_power
//
// with (1 - lambda^2) expanded to 4p(1-p).
RationalFunction lambda_form_to_p(const std::vector<long long>& num_coeffs,
                                  int lambda_power, const BigRational& scale,
                                  int denom_power);

}  // namespace hmp
