#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "hmp/rational.hpp"

namespace hmp {

// Dense univariate polynomial over BigRational, indexed by power of the
// indeterminate. The zero polynomial has an empty coefficient list;
// otherwise the leading coefficient is nonzero.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(BigRational constant);
  explicit Polynomial(std::vector<BigRational> coeffs);
  Polynomial(std::initializer_list<long> coeffs);

  static Polynomial zero() { return Polynomial(); }
  static Polynomial one() { return Polynomial(BigRational(1)); }
  // coeff * x^power
  static Polynomial monomial(const BigRational& coeff, int power);
  // The chain variable p itself.
  static Polynomial variable() { return monomial(BigRational(1), 1); }
  // (1 - x)^n expanded.
  static Polynomial one_minus_x_pow(int n);

  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<BigRational>& coeffs() const { return coeffs_; }
  BigRational coeff(int power) const;
  const BigRational& leading() const;
  BigRational constant_term() const { return coeff(0); }

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& other) const;
  Polynomial operator-(const Polynomial& other) const;
  Polynomial operator*(const Polynomial& other) const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);
  bool operator==(const Polynomial& other) const { return coeffs_ == other.coeffs_; }
  bool operator!=(const Polynomial& other) const { return !(*this == other); }

  Polynomial scaled(const BigRational& factor) const;
  Polynomial shifted(int powers) const;  // multiply by x^powers
  Polynomial pow(int exponent) const;

  BigRational eval(const BigRational& x) const;
  double eval(double x) const;

  // Exact division; throws invalid_input_error when the division leaves a
  // remainder or the divisor is zero.
  Polynomial divide_exact(const Polynomial& divisor) const;

  // Number of trailing zero coefficients, i.e. multiplicity of the root 0.
  int trailing_zero_count() const;
  // Multiplicity of the root 1; quotient by (1-x)^multiplicity in *reduced.
  int root_one_multiplicity(Polynomial* reduced = nullptr) const;

  // Content
  //   gcd of coefficient numerators / lcm of coefficient denominators,
  // sign taken from the leading coefficient. Zero polynomial -> 0.
  BigRational content() const;
  // this / content(): integer coefficients, positive leading one.
  Polynomial primitive_part() const;

  std::string to_string(const std::string& var = "p") const;

 private:
  void trim();
  std::vector<BigRational> coeffs_;
};

// Greatest common divisor, primitive with positive leading coefficient
// (primitive pseudo-remainder sequence). gcd(0, f) = primitive(f).
Polynomial poly_gcd(const Polynomial& a, const Polynomial& b);

}  // namespace hmp
