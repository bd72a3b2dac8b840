#include <doctest.h>

#include <cmath>

#include "hmp/errors.hpp"
#include "hmp/process.hpp"

using namespace hmp;

namespace {

BitSequence seq(std::vector<int> symbols) { return BitSequence(std::move(symbols)); }

}  // namespace

TEST_CASE("params and sequence validation") {
  CHECK_THROWS_AS(ProcessParams(-0.1, 0.0), invalid_input_error);
  CHECK_THROWS_AS(ProcessParams(1.1, 0.0), invalid_input_error);
  CHECK_THROWS_AS(ProcessParams(0.3, 0.5), invalid_input_error);
  CHECK_THROWS_AS(ProcessParams(0.3, -0.01), invalid_input_error);
  CHECK_NOTHROW(ProcessParams(0.0, 0.0));
  CHECK_NOTHROW(ProcessParams(1.0, 0.49));

  CHECK_THROWS_AS(BitSequence(std::vector<int>{}), invalid_input_error);
  CHECK_THROWS_AS(BitSequence(std::vector<int>{1, 0}), invalid_input_error);
  CHECK(BitSequence::from_index(0b011, 3).to_string() == "++-");
  CHECK(BitSequence::from_index(0b011, 3).to_index() == 0b011);
  CHECK(seq({1, -1, -1}).adjacent_agreements() == 1);
  CHECK(seq({1, -1}).flipped() == seq({-1, 1}));
  CHECK(seq({1, -1, -1}).reversed() == seq({-1, -1, 1}));
}

TEST_CASE("markov_prob") {
  CHECK(markov_prob(seq({1}), 0.3) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(markov_prob(seq({1, 1, 1}), 0.3) == doctest::Approx(0.5 * 0.7 * 0.7).epsilon(1e-15));
  double total = 0.0;
  for (std::uint64_t i = 0; i < 8; ++i) {
    total += markov_prob(BitSequence::from_index(i, 3), 0.3);
  }
  CHECK(total == doctest::Approx(1.0).epsilon(1e-14));
  CHECK_THROWS_AS(markov_prob(seq({1}), 0.0), invalid_input_error);
  CHECK_THROWS_AS(markov_prob(seq({1}), 1.0), invalid_input_error);
}

TEST_CASE("emission_prob") {
  CHECK(emission_prob(seq({1, -1}), seq({1, -1}), 0.0) == 1.0);
  CHECK(emission_prob(seq({1, -1}), seq({-1, 1}), 0.2) == doctest::Approx(0.04).epsilon(1e-15));
  double total = 0.0;
  const BitSequence s = seq({1, -1, 1});
  for (std::uint64_t i = 0; i < 8; ++i) {
    total += emission_prob(BitSequence::from_index(i, 3), s, 0.2);
  }
  CHECK(total == doctest::Approx(1.0).epsilon(1e-14));
  CHECK_THROWS_AS(emission_prob(seq({1}), seq({1, 1}), 0.1), invalid_input_error);
}

TEST_CASE("observed_prob_brute") {
  const ProcessParams params(0.3, 0.1);
  CHECK(observed_prob_brute(seq({1}), params) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(observed_prob_brute(seq({-1}), params) == doctest::Approx(0.5).epsilon(1e-15));

  // Four-term oracle for R = (+1, +1)
  const double p = 0.3, eps = 0.1;
  const double oracle = 0.5 * ((1 - p) * ((1 - eps) * (1 - eps) + eps * eps) +
                               2 * p * eps * (1 - eps));
  CHECK(observed_prob_brute(seq({1, 1}), params) == doctest::Approx(oracle).epsilon(1e-15));

  // Noiseless channel reduces to the Markov probability
  const ProcessParams clean(0.3, 0.0);
  for (std::uint64_t i = 0; i < 16; ++i) {
    const BitSequence r = BitSequence::from_index(i, 4);
    CHECK(observed_prob_brute(r, clean) == doctest::Approx(markov_prob(r, 0.3)).epsilon(1e-14));
  }

  CHECK_THROWS_AS(observed_prob_brute(seq({1, 1, 1, 1}), params, 3), resource_limit_error);
}

TEST_CASE("observed_prob_forward matches brute force") {
  const ProcessParams params(0.3, 0.1);
  for (std::uint64_t i = 0; i < (1u << 10); ++i) {
    const BitSequence r = BitSequence::from_index(i, 10);
    const double brute = observed_prob_brute(r, params);
    const double fwd = std::exp(observed_prob_forward(r, params));
    CHECK(fwd == doctest::Approx(brute).epsilon(1e-10));
  }
  CHECK(observed_prob_forward(seq({1}), params) == doctest::Approx(std::log(0.5)).epsilon(1e-14));
  const ProcessParams clean(0.3, 0.0);
  CHECK(observed_prob_forward(seq({1, -1}), clean) ==
        doctest::Approx(std::log(0.3 / 2.0)).epsilon(1e-14));
}

TEST_CASE("global flip and reversal symmetry of Q") {
  const ProcessParams params(0.2, 0.15);
  for (std::uint64_t i = 0; i < (1u << 8); ++i) {
    const BitSequence r = BitSequence::from_index(i, 8);
    const double q = observed_prob_brute(r, params);
    CHECK(observed_prob_brute(r.flipped(), params) == doctest::Approx(q).epsilon(1e-13));
    CHECK(observed_prob_brute(r.reversed(), params) == doctest::Approx(q).epsilon(1e-13));
  }
}

TEST_CASE("normalization of Q over all sequences") {
  for (const double p : {0.1, 0.45}) {
    for (const double eps : {0.01, 0.2}) {
      const ProcessParams params(p, eps);
      for (int n = 1; n <= 12; ++n) {
        double total = 0.0;
        for (std::uint64_t i = 0; i < (std::uint64_t{1} << n); ++i) {
          total += observed_prob_brute(BitSequence::from_index(i, n), params);
        }
        CHECK(total == doctest::Approx(1.0).epsilon(1e-10));
      }
    }
  }
}

TEST_CASE("sample") {
  const auto [s0, r0] = sample(ProcessParams(0.3, 0.0), 200, 42);
  CHECK(s0 == r0);  // clean channel copies the source

  const auto [s1, r1] = sample(ProcessParams(0.0, 0.2), 200, 42);
  for (int i = 1; i < s1.size(); ++i) CHECK(s1[i] == s1[0]);

  const auto [s2, r2] = sample(ProcessParams(0.3, 0.1), 500, 7);
  const auto [s3, r3] = sample(ProcessParams(0.3, 0.1), 500, 7);
  CHECK(s2 == s3);
  CHECK(r2 == r3);

  // Neighbor-flip frequency obeys the law of large numbers.
  const int n = 1000000;
  const auto [s4, r4] = sample(ProcessParams(0.3, 0.1), n, 123);
  long flips = 0;
  for (int i = 1; i < s4.size(); ++i) {
    if (s4[i] != s4[i - 1]) ++flips;
  }
  const double freq = static_cast<double>(flips) / (n - 1);
  const double sigma = std::sqrt(0.3 * 0.7 / (n - 1));
  CHECK(std::abs(freq - 0.3) < 3 * sigma);

  CHECK_THROWS_AS(sample(ProcessParams(0.3, 0.1), 0, 1), invalid_input_error);
}
