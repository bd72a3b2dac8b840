#include "hmp/rational.hpp"

#include "hmp/errors.hpp"

namespace hmp {

BigRational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) {
    throw invalid_input_error("rational: zero denominator");
  }
  BigRational q(num, den);
  q.canonicalize();
  return q;
}

BigRational make_rational(long num, long den) {
  return make_rational(BigInt(num), BigInt(den));
}

BigRational rational_from_string(const std::string& text) {
  BigRational q;
  if (q.set_str(text, 10) != 0) {
    throw invalid_input_error("rational: cannot parse '" + text + "'");
  }
  q.canonicalize();
  return q;
}

double to_double(const BigRational& q) { return q.get_d(); }

BigRational rational_pow(const BigRational& base, long exponent) {
  if (exponent == 0) return BigRational(1);
  if (base == 0 && exponent < 0) {
    throw invalid_input_error("rational: 0 raised to negative power");
  }
  BigRational b = exponent < 0 ? BigRational(1) / base : base;
  unsigned long e = static_cast<unsigned long>(exponent < 0 ? -exponent : exponent);
  BigRational out;
  mpz_pow_ui(out.get_num_mpz_t(), b.get_num_mpz_t(), e);
  mpz_pow_ui(out.get_den_mpz_t(), b.get_den_mpz_t(), e);
  return out;
}

std::string to_string(const BigRational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

bool is_power_of_two(const BigRational& q, long* exponent) {
  if (q == 0) return false;
  const BigInt num = abs(q.get_num());
  const BigInt den = q.get_den();
  const bool num_pow2 = mpz_popcount(num.get_mpz_t()) == 1;
  const bool den_pow2 = mpz_popcount(den.get_mpz_t()) == 1;
  if (!num_pow2 || !den_pow2) return false;
  // Canonical form => one of num, den is 1.
  const long up = static_cast<long>(mpz_scan1(num.get_mpz_t(), 0));
  const long down = static_cast<long>(mpz_scan1(den.get_mpz_t(), 0));
  if (exponent != nullptr) *exponent = up - down;
  return true;
}

}  // namespace hmp
