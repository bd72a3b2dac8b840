#include <doctest.h>

#include <cmath>

#include "hmp/errors.hpp"
#include "hmp/loglinear.hpp"
#include "hmp/ratfunc.hpp"
#include "hmp/rng.hpp"

using namespace hmp;

namespace {

Polynomial random_poly(Rng& rng, int max_degree, long coeff_range) {
  const int degree = static_cast<int>(rng.next() % static_cast<std::uint64_t>(max_degree + 1));
  std::vector<BigRational> coeffs;
  for (int i = 0; i <= degree; ++i) {
    const long num = static_cast<long>(rng.next() % (2 * coeff_range + 1)) - coeff_range;
    const long den = 1 + static_cast<long>(rng.next() % 3);
    coeffs.push_back(make_rational(num, den));
  }
  return Polynomial(std::move(coeffs));
}

RationalFunction random_ratfunc(Rng& rng) {
  Polynomial den = random_poly(rng, 3, 4);
  while (den.is_zero()) den = random_poly(rng, 3, 4);
  return RationalFunction(random_poly(rng, 4, 6), den);
}

}  // namespace

TEST_CASE("rational basics") {
  CHECK(make_rational(2, 4) == make_rational(1, 2));
  CHECK(make_rational(-3, -6) == make_rational(1, 2));
  CHECK(make_rational(3, -6) < 0);
  CHECK_THROWS_AS(make_rational(1, 0), invalid_input_error);
  CHECK(to_string(make_rational(-1, 2)) == "-1/2");
  CHECK(to_string(make_rational(4, 2)) == "2");
  CHECK(rational_pow(make_rational(2, 3), 3) == make_rational(8, 27));
  CHECK(rational_pow(make_rational(2, 3), -2) == make_rational(9, 4));

  long e = 0;
  CHECK(is_power_of_two(make_rational(1, 2), &e));
  CHECK(e == -1);
  CHECK(is_power_of_two(make_rational(8), &e));
  CHECK(e == 3);
  CHECK_FALSE(is_power_of_two(make_rational(3, 4), &e));
}

TEST_CASE("polynomial ring laws on random inputs") {
  Rng rng(20240811);
  for (int iter = 0; iter < 200; ++iter) {
    const Polynomial a = random_poly(rng, 4, 5);
    const Polynomial b = random_poly(rng, 4, 5);
    const Polynomial c = random_poly(rng, 4, 5);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == Polynomial::zero());
  }
}

TEST_CASE("polynomial division and factor extraction") {
  const Polynomial p = Polynomial::variable();
  const Polynomial f = (p * p).scaled(make_rational(3)) + p;  // 3p^2 + p
  CHECK(f.divide_exact(p) == Polynomial({1, 3}));
  CHECK_THROWS_AS((f + Polynomial::one()).divide_exact(p), invalid_input_error);
  CHECK(f.trailing_zero_count() == 1);

  Polynomial reduced;
  const Polynomial g = Polynomial::one_minus_x_pow(3) * Polynomial({2, 1});
  CHECK(g.root_one_multiplicity(&reduced) == 3);
  CHECK(reduced == Polynomial({2, 1}));

  CHECK(poly_gcd(Polynomial({0, 2, 2}), Polynomial({0, 0, 4, 4})) == Polynomial({0, 1, 1}));
}

TEST_CASE("ratfunc normalization examples") {
  // (2p^2 - 2p) / (2p - 2) -> p
  const RationalFunction a(Polynomial({0, -2, 2}), Polynomial({-2, 2}));
  CHECK(a == RationalFunction(Polynomial::variable()));

  // 0 / (p + 1) -> 0/1
  const RationalFunction zero(Polynomial::zero(), Polynomial({1, 1}));
  CHECK(zero.is_zero());
  CHECK(zero.den() == Polynomial::one());

  // (1-2p)^2 X / X with X = 2 p^2 (1-p)^2 cancels to (1-2p)^2 / X
  const Polynomial one_minus_2p_sq = Polynomial({1, -2}) * Polynomial({1, -2});
  const Polynomial x = (Polynomial::variable() * Polynomial::variable() *
                        Polynomial::one_minus_x_pow(2))
                           .scaled(make_rational(2));
  const RationalFunction shared(one_minus_2p_sq * x, x * x);
  const RationalFunction direct(one_minus_2p_sq, x);
  CHECK(shared == direct);

  CHECK_THROWS_AS(RationalFunction(Polynomial::one(), Polynomial::zero()), invalid_input_error);
}

TEST_CASE("ratfunc canonical form is deterministic and reduced") {
  Rng rng(77);
  for (int iter = 0; iter < 100; ++iter) {
    const RationalFunction f = random_ratfunc(rng);
    // Idempotence
    CHECK(ratfunc_normalize(f) == f);
    // den leading positive, joint content 1 (integer coefficients)
    CHECK(f.den().leading() > 0);
    for (const auto& c : f.num().coeffs()) CHECK(c.get_den() == 1);
    for (const auto& c : f.den().coeffs()) CHECK(c.get_den() == 1);
    // Same value after scaling both sides by a common junk factor
    const Polynomial junk({3, 0, -7, 1});
    const RationalFunction rescaled(f.num() * junk, f.den() * junk);
    CHECK(rescaled == f);
  }
}

TEST_CASE("ratfunc_equal is an equivalence relation") {
  const RationalFunction a(Polynomial::variable(),
                           Polynomial::variable() * Polynomial::variable());
  const RationalFunction b(Polynomial::one(), Polynomial::variable());
  CHECK(ratfunc_equal(a, b));
  CHECK(ratfunc_equal(b, a));
  CHECK_FALSE(ratfunc_equal(RationalFunction(Polynomial::variable()),
                            RationalFunction(Polynomial({1, -1}))));

  Rng rng(99);
  for (int iter = 0; iter < 50; ++iter) {
    const RationalFunction f = random_ratfunc(rng);
    const RationalFunction g = random_ratfunc(rng);
    CHECK(ratfunc_equal(f, f));
    if (ratfunc_equal(f, g)) CHECK(f == g);  // canonical forms coincide
  }
}

TEST_CASE("ratfunc arithmetic and evaluation") {
  const RationalFunction p(Polynomial::variable());
  const RationalFunction one_minus_p(Polynomial({1, -1}));
  const RationalFunction sum = p + one_minus_p;
  CHECK(sum == RationalFunction(1));
  CHECK((p / p) == RationalFunction(1));

  const RationalFunction f = p / (one_minus_p * one_minus_p);
  CHECK(f.eval(make_rational(1, 3)) == make_rational(3, 4));
  CHECK(f.eval(0.5) == doctest::Approx(2.0));
  CHECK_THROWS_AS(f.eval(make_rational(1)), evaluation_pole_error);
}

TEST_CASE("loglinear_eval examples") {
  // H^(0) basis combination at p = 1/2 gives ln 2
  LogLinearExpr h0;
  h0.c_logp = RationalFunction(Polynomial({0, -1}));
  h0.c_log1mp = RationalFunction(Polynomial({-1, 1}));
  CHECK(loglinear_eval(h0, 0.5) == doctest::Approx(std::log(2.0)).epsilon(1e-14));

  CHECK(loglinear_eval(LogLinearExpr::zero(), 0.37) == 0.0);

  // Second-order closed form evaluated at p = 0.3 against the directly
  // typed expression -2(1-2p)ln((1-p)/p) - (1-2p)^2/(2p^2(1-p)^2).
  LogLinearExpr h2;
  h2.c_logp = RationalFunction(Polynomial({2, -4}));
  h2.c_log1mp = RationalFunction(Polynomial({-2, 4}));
  h2.c_const = RationalFunction(
      -(Polynomial({1, -2}) * Polynomial({1, -2})),
      (Polynomial::variable() * Polynomial::variable() * Polynomial::one_minus_x_pow(2))
          .scaled(make_rational(2)));
  const double direct =
      -2.0 * 0.4 * std::log(0.7 / 0.3) - 0.16 / (2.0 * 0.09 * 0.49);
  CHECK(loglinear_eval(h2, 0.3) == doctest::Approx(direct).epsilon(1e-14));
  CHECK(loglinear_eval(h2, 0.3) == doctest::Approx(-2.4919).epsilon(1e-4));

  // Pole of a coefficient inside (0,1)
  LogLinearExpr pole;
  pole.c_const = RationalFunction(Polynomial::one(), Polynomial({1, -2}));
  CHECK_THROWS_AS(loglinear_eval(pole, 0.5), evaluation_pole_error);
  CHECK_THROWS_AS(loglinear_eval(h0, 0.0), invalid_input_error);
}

TEST_CASE("loglinear_eval agrees with exact arithmetic") {
  Rng rng(4242);
  int checked = 0;
  for (int iter = 0; iter < 80; ++iter) {
    const RationalFunction f = random_ratfunc(rng);
    const BigRational x = make_rational(1 + static_cast<long>(rng.next() % 8), 10);
    BigRational exact;
    try {
      exact = f.eval(x);
    } catch (const evaluation_pole_error&) {
      continue;
    }
    const double approx = f.eval(to_double(x));
    const double reference = to_double(exact);
    if (std::abs(reference) > 1e-6 && std::abs(reference) < 1e12) {
      CHECK(approx == doctest::Approx(reference).epsilon(1e-12));
      ++checked;
    }
  }
  CHECK(checked > 20);
}

TEST_CASE("lambda_form_to_p") {
  // lambda^2 with unit scale and no denominator -> (1-2p)^2
  const RationalFunction sq = lambda_form_to_p({1}, 2, BigRational(1), 0);
  CHECK(sq == RationalFunction(Polynomial({1, -2}) * Polynomial({1, -2})));

  // constant 1 -> 1
  CHECK(lambda_form_to_p({1}, 0, BigRational(1), 0) == RationalFunction(1));

  // Third-order table entry equals the directly assembled
  // -16 (5 l^4 - 10 l^2 - 3) l^2 / (3 (1 - l^2)^4) with l = 1 - 2p.
  const RationalFunction h3 = lambda_form_to_p({-3, -10, 5}, 2, make_rational(-16, 3), 4);
  const Polynomial l({1, -2});
  const Polynomial l2 = l * l;
  const Polynomial num =
      ((l2 * l2).scaled(make_rational(5)) + l2.scaled(make_rational(-10)) +
       Polynomial(make_rational(-3))) *
      l2;
  const Polynomial den = Polynomial({0, 4, -4}).pow(4).scaled(make_rational(3));
  CHECK(ratfunc_equal(h3, RationalFunction(num.scaled(make_rational(-16)), den)));
}
