#include <doctest.h>

#include <cmath>

#include "hmp/errors.hpp"
#include "hmp/ising.hpp"
#include "hmp/rng.hpp"

using namespace hmp;

TEST_CASE("ising_couplings") {
  const IsingParams c1 = ising_couplings(ProcessParams(0.1, 0.25), 5);
  CHECK(c1.j == doctest::Approx(0.5 * std::log(9.0)).epsilon(1e-14));
  CHECK(c1.k == doctest::Approx(0.5 * std::log(3.0)).epsilon(1e-14));
  CHECK(ising_couplings(ProcessParams(0.5, 0.1), 5).j == doctest::Approx(0.0));

  // defining relations hold to 1e-12 relative
  for (const double p : {0.05, 0.3, 0.7}) {
    for (const double eps : {0.01, 0.2, 0.45}) {
      const IsingParams c = ising_couplings(ProcessParams(p, eps), 6);
      CHECK(std::exp(2.0 * c.j) == doctest::Approx((1 - p) / p).epsilon(1e-12));
      CHECK(std::exp(2.0 * c.k) == doctest::Approx((1 - eps) / eps).epsilon(1e-12));
    }
  }

  CHECK_THROWS_AS(ising_couplings(ProcessParams(0.3, 0.0), 5), infinite_coupling_error);
  CHECK_THROWS_AS(ising_couplings(ProcessParams(0.0, 0.1), 5), invalid_input_error);
}

TEST_CASE("A Z(R) equals Q(R), open boundary") {
  const int n = 8;
  const ProcessParams params(0.3, 0.1);
  const IsingParams ising = ising_couplings(params, n, Boundary::open);
  const double a = ising.a0 * ising.a1;
  double total = 0.0;
  for (std::uint64_t i = 0; i < (1u << n); ++i) {
    const BitSequence r = BitSequence::from_index(i, n);
    const double az = a * ising_z(r, ising);
    total += az;
    CHECK(az == doctest::Approx(observed_prob_brute(r, params)).epsilon(1e-10));
  }
  CHECK(total == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("A Z(R) equals the circular-weight reference, periodic boundary") {
  const int n = 6;
  const ProcessParams params(0.25, 0.15);
  const IsingParams ising = ising_couplings(params, n, Boundary::periodic);
  const double a = ising.a0 * ising.a1;
  double total = 0.0;
  for (std::uint64_t i = 0; i < (1u << n); ++i) {
    const BitSequence r = BitSequence::from_index(i, n);
    const double az = a * ising_z(r, ising);
    total += az;
    CHECK(az == doctest::Approx(q_reference(r, params, Boundary::periodic)).epsilon(1e-10));
  }
  const double lambda = 1.0 - 2.0 * params.p;
  CHECK(total == doctest::Approx(1.0 + std::pow(lambda, n)).epsilon(1e-12));
}

TEST_CASE("free couplings give Z = 2^N") {
  IsingParams free;
  free.j = 0.0;
  free.k = 0.0;
  free.a0 = free.a1 = 1.0;
  free.boundary = Boundary::open;
  free.n = 6;
  CHECK(ising_z(BitSequence::from_index(13, 6), free) == doctest::Approx(64.0).epsilon(1e-14));
}

TEST_CASE("partition-sum identity for flipped bond patterns") {
  // A0 sum_R exp(sum_j Delta_j J r_j r_{j+1}) = 1 for any sign pattern.
  Rng rng(5150);
  for (int n = 2; n <= 10; ++n) {
    for (int trial = 0; trial < 4; ++trial) {
      const double j = 0.5 * std::log((1 - 0.3) / 0.3);
      std::vector<int> delta(static_cast<size_t>(n - 1));
      for (auto& d : delta) d = rng.bernoulli(0.5) ? 1 : -1;
      const double a0 = 0.5 * std::pow(2.0 * std::cosh(j), -(n - 1));
      double total = 0.0;
      for (std::uint64_t i = 0; i < (std::uint64_t{1} << n); ++i) {
        const BitSequence r = BitSequence::from_index(i, n);
        double energy = 0.0;
        for (int b = 0; b + 1 < n; ++b) energy += delta[static_cast<size_t>(b)] * j * r[b] * r[b + 1];
        total += std::exp(energy);
      }
      CHECK(a0 * total == doctest::Approx(1.0).epsilon(1e-12));
    }
  }
}

TEST_CASE("ising_z_low_order") {
  const int n = 8;
  const ProcessParams params(0.3, 0.05);
  const IsingParams per = ising_couplings(params, n, Boundary::periodic);

  // order 0 with all spins up: e^{NK} e^{NJ}
  const BitSequence up = BitSequence::from_index((1u << n) - 1, n);
  CHECK(ising_z_low_order(up, per, 0) ==
        doctest::Approx(std::exp(n * per.k) * std::exp(n * per.j)).epsilon(1e-12));

  // guards
  const IsingParams open = ising_couplings(params, n, Boundary::open);
  CHECK_THROWS_AS(ising_z_low_order(up, open, 1), invalid_input_error);
  CHECK_THROWS_AS(ising_z_low_order(up, per, 3), unsupported_order_error);
  const IsingParams tiny = ising_couplings(params, 4, Boundary::periodic);
  CHECK_THROWS_AS(ising_z_low_order(BitSequence::from_index(5, 4), tiny, 2),
                  invalid_input_error);

  // class-b term count N(N-3)/2, read off at J = 0 where each
  // configuration contributes exactly 1.
  IsingParams zero_j = per;
  zero_j.j = 0.0;
  const BitSequence r = BitSequence::from_index(0b10110100, n);
  const double z0 = std::exp(n * zero_j.k);
  const double order1 = ising_z_low_order(r, zero_j, 1);
  const double order2 = ising_z_low_order(r, zero_j, 2);
  const double pair_terms = (order2 - order1) / (z0 * std::exp(-4.0 * zero_j.k));
  CHECK(pair_terms == doctest::Approx(n + n * (n - 3) / 2.0).epsilon(1e-10));
}

TEST_CASE("truncated Z converges at the predicted exponential rate") {
  // |Z - Z_trunc(order)| / Z^(0) ~ e^{-2(order+1)K}: the log-slope versus
  // K must sit within 10% of -2(order+1).
  const int n = 8;
  const double p = 0.3;
  const BitSequence r = BitSequence::from_index(0b10110100, n);
  const std::vector<double> eps_grid{0.02, 0.01, 0.005, 0.002, 0.001};
  for (int order = 0; order <= 2; ++order) {
    std::vector<double> xs, ys;
    for (const double eps : eps_grid) {
      const IsingParams per = ising_couplings(ProcessParams(p, eps), n, Boundary::periodic);
      const double z = ising_z(r, per);
      const double trunc = ising_z_low_order(r, per, order);
      double bond_energy = 0.0;
      for (int i = 0; i < n; ++i) bond_energy += r[i] * r[(i + 1) % n];
      const double z0 = std::exp(n * per.k) * std::exp(per.j * bond_energy);
      xs.push_back(per.k);
      ys.push_back(std::log(std::abs(z - trunc) / z0));
    }
    // least-squares slope
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const int m = static_cast<int>(xs.size());
    for (int i = 0; i < m; ++i) {
      sx += xs[static_cast<size_t>(i)];
      sy += ys[static_cast<size_t>(i)];
      sxx += xs[static_cast<size_t>(i)] * xs[static_cast<size_t>(i)];
      sxy += xs[static_cast<size_t>(i)] * ys[static_cast<size_t>(i)];
    }
    const double slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
    const double predicted = -2.0 * (order + 1);
    CHECK(std::abs(slope - predicted) < 0.1 * std::abs(predicted));
  }
}
