#include "hmp/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "hmp/errors.hpp"

namespace hmp {

Polynomial::Polynomial(BigRational constant) {
  if (constant != 0) coeffs_.push_back(std::move(constant));
}

Polynomial::Polynomial(std::vector<BigRational> coeffs) : coeffs_(std::move(coeffs)) {
  trim();
}

Polynomial::Polynomial(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

Polynomial Polynomial::monomial(const BigRational& coeff, int power) {
  if (coeff == 0) return Polynomial();
  std::vector<BigRational> c(static_cast<size_t>(power) + 1, BigRational(0));
  c.back() = coeff;
  return Polynomial(std::move(c));
}

Polynomial Polynomial::one_minus_x_pow(int n) {
  Polynomial base({1, -1});
  return base.pow(n);
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigRational Polynomial::coeff(int power) const {
  if (power < 0 || power >= static_cast<int>(coeffs_.size())) return BigRational(0);
  return coeffs_[static_cast<size_t>(power)];
}

const BigRational& Polynomial::leading() const {
  if (coeffs_.empty()) {
    static const BigRational kZero(0);
    return kZero;
  }
  return coeffs_.back();
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
  Polynomial out = *this;
  out += other;
  return out;
}

Polynomial Polynomial::operator-(const Polynomial& other) const {
  Polynomial out = *this;
  out -= other;
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size(), BigRational(0));
  for (size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size(), BigRational(0));
  for (size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  trim();
  return *this;
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
  if (is_zero() || other.is_zero()) return Polynomial();
  std::vector<BigRational> out(coeffs_.size() + other.coeffs_.size() - 1, BigRational(0));
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (size_t j = 0; j < other.coeffs_.size(); ++j) {
      if (other.coeffs_[j] == 0) continue;
      out[i + j] += coeffs_[i] * other.coeffs_[j];
    }
  }
  return Polynomial(std::move(out));
}

Polynomial& Polynomial::operator*=(const Polynomial& other) {
  *this = *this * other;
  return *this;
}

Polynomial Polynomial::scaled(const BigRational& factor) const {
  if (factor == 0) return Polynomial();
  Polynomial out = *this;
  for (auto& c : out.coeffs_) c *= factor;
  return out;
}

Polynomial Polynomial::shifted(int powers) const {
  if (is_zero() || powers == 0) return *this;
  std::vector<BigRational> out(static_cast<size_t>(powers), BigRational(0));
  out.insert(out.end(), coeffs_.begin(), coeffs_.end());
  return Polynomial(std::move(out));
}

Polynomial Polynomial::pow(int exponent) const {
  if (exponent < 0) throw invalid_input_error("polynomial: negative exponent");
  Polynomial result = Polynomial::one();
  Polynomial base = *this;
  int e = exponent;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

BigRational Polynomial::eval(const BigRational& x) const {
  BigRational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

double Polynomial::eval(double x) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + to_double(*it);
  return acc;
}

Polynomial Polynomial::divide_exact(const Polynomial& divisor) const {
  if (divisor.is_zero()) throw invalid_input_error("polynomial: division by zero");
  if (is_zero()) return Polynomial();
  if (degree() < divisor.degree()) {
    throw invalid_input_error("polynomial: inexact division (degree)");
  }
  std::vector<BigRational> rem = coeffs_;
  std::vector<BigRational> quot(static_cast<size_t>(degree() - divisor.degree()) + 1, BigRational(0));
  const BigRational& lead = divisor.leading();
  for (int d = degree(); d >= divisor.degree();) {
    BigRational q = rem[static_cast<size_t>(d)] / lead;
    quot[static_cast<size_t>(d - divisor.degree())] = q;
    for (int i = 0; i <= divisor.degree(); ++i) {
      rem[static_cast<size_t>(d - divisor.degree() + i)] -= q * divisor.coeff(i);
    }
    while (d >= 0 && rem[static_cast<size_t>(d)] == 0) --d;
  }
  for (const auto& c : rem) {
    if (c != 0) throw invalid_input_error("polynomial: inexact division (remainder)");
  }
  return Polynomial(std::move(quot));
}

int Polynomial::trailing_zero_count() const {
  if (is_zero()) return 0;
  int n = 0;
  while (coeffs_[static_cast<size_t>(n)] == 0) ++n;
  return n;
}

int Polynomial::root_one_multiplicity(Polynomial* reduced) const {
  Polynomial cur = *this;
  int mult = 0;
  const Polynomial one_minus_x({1, -1});
  while (!cur.is_zero() && cur.eval(BigRational(1)) == 0) {
    cur = cur.divide_exact(one_minus_x);
    ++mult;
  }
  if (reduced != nullptr) *reduced = cur;
  return mult;
}

BigRational Polynomial::content() const {
  if (is_zero()) return BigRational(0);
  BigInt num_gcd(0);
  BigInt den_lcm(1);
  for (const auto& c : coeffs_) {
    if (c == 0) continue;
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  }
  BigRational c = make_rational(num_gcd, den_lcm);
  if (leading() < 0) c = -c;
  return c;
}

Polynomial Polynomial::primitive_part() const {
  if (is_zero()) return Polynomial();
  return scaled(BigRational(1) / content());
}

std::string Polynomial::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int d = degree(); d >= 0; --d) {
    const BigRational c = coeff(d);
    if (c == 0) continue;
    const BigRational mag = abs(c);
    if (first) {
      if (c < 0) out << "-";
      first = false;
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    const bool unit = (mag == 1);
    if (d == 0 || !unit) out << hmp::to_string(mag);
    if (d > 0) {
      if (!unit) out << "*";
      out << var;
      if (d > 1) out << "^" << d;
    }
  }
  return out.str();
}

namespace {

// Primitive pseudo-remainder sequence over integer coefficient vectors.
std::vector<BigInt> to_int_coeffs(const Polynomial& p) {
  const Polynomial prim = p.primitive_part();
  std::vector<BigInt> out;
  out.reserve(prim.coeffs().size());
  for (const auto& c : prim.coeffs()) out.push_back(c.get_num());
  return out;
}

void make_primitive(std::vector<BigInt>& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
  if (c.empty()) return;
  BigInt g(0);
  for (const auto& x : c) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  if (c.back() < 0) g = -g;
  for (auto& x : c) x /= g;
}

// r = lc(b)^(deg a - deg b + 1) * a  mod  b
std::vector<BigInt> pseudo_remainder(std::vector<BigInt> a, const std::vector<BigInt>& b) {
  const BigInt& lead = b.back();
  int da = static_cast<int>(a.size()) - 1;
  const int db = static_cast<int>(b.size()) - 1;
  while (da >= db) {
    const BigInt top = a[static_cast<size_t>(da)];
    for (auto& x : a) x *= lead;
    for (int i = 0; i <= db; ++i) {
      a[static_cast<size_t>(da - db + i)] -= top * b[static_cast<size_t>(i)];
    }
    while (da >= 0 && a[static_cast<size_t>(da)] == 0) --da;
    a.resize(static_cast<size_t>(da + 1));
  }
  return a;
}

}  // namespace

Polynomial poly_gcd(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero()) return b.is_zero() ? Polynomial() : b.primitive_part();
  if (b.is_zero()) return a.primitive_part();
  std::vector<BigInt> u = to_int_coeffs(a);
  std::vector<BigInt> v = to_int_coeffs(b);
  if (u.size() < v.size()) std::swap(u, v);
  while (!v.empty()) {
    std::vector<BigInt> r = pseudo_remainder(u, v);
    make_primitive(r);
    u = std::move(v);
    v = std::move(r);
  }
  std::vector<BigRational> coeffs;
  coeffs.reserve(u.size());
  for (const auto& x : u) coeffs.emplace_back(x);
  return Polynomial(std::move(coeffs));
}

}  // namespace hmp
