#include <doctest.h>

#include <cmath>

#include "hmp/entropy.hpp"
#include "hmp/errors.hpp"

using namespace hmp;

namespace {

double binary_entropy(double p) { return -(p * std::log(p) + (1 - p) * std::log1p(-p)); }

}  // namespace

TEST_CASE("block_entropy closed-form cases") {
  CHECK(block_entropy(1, ProcessParams(0.3, 0.1)) ==
        doctest::Approx(std::log(2.0)).epsilon(1e-14));

  // Clean channel: H_N = ln 2 + (N-1) h_b(p)
  for (int n = 1; n <= 10; ++n) {
    CHECK(block_entropy(n, ProcessParams(0.3, 0.0)) ==
          doctest::Approx(std::log(2.0) + (n - 1) * binary_entropy(0.3)).epsilon(1e-12));
  }

  // Unbiased source: N ln 2 for any eps
  for (const double eps : {0.0, 0.1, 0.3}) {
    CHECK(block_entropy(7, ProcessParams(0.5, eps)) ==
          doctest::Approx(7 * std::log(2.0)).epsilon(1e-12));
  }

  EntropyOptions small;
  small.cap = 5;
  CHECK_THROWS_AS(block_entropy(6, ProcessParams(0.3, 0.1), small), resource_limit_error);
}

TEST_CASE("conditional_entropy") {
  CHECK_THROWS_AS(conditional_entropy(1, ProcessParams(0.3, 0.1)), invalid_input_error);

  // monotone non-increasing at (0.3, 0.1)
  const auto levels = block_entropies(12, ProcessParams(0.3, 0.1));
  for (int n = 3; n <= 12; ++n) {
    const double c_prev = levels[static_cast<size_t>(n - 2)] - levels[static_cast<size_t>(n - 3)];
    const double c_cur = levels[static_cast<size_t>(n - 1)] - levels[static_cast<size_t>(n - 2)];
    CHECK(c_cur <= c_prev + 1e-10);
  }

  for (int n = 2; n <= 8; ++n) {
    CHECK(conditional_entropy(n, ProcessParams(0.3, 0.0)) ==
          doctest::Approx(binary_entropy(0.3)).epsilon(1e-12));
  }
  CHECK(conditional_entropy(6, ProcessParams(0.5, 0.2)) ==
        doctest::Approx(std::log(2.0)).epsilon(1e-12));
}

TEST_CASE("lower_bound") {
  for (int n = 2; n <= 8; ++n) {
    CHECK(lower_bound(n, ProcessParams(0.3, 0.0)) ==
          doctest::Approx(binary_entropy(0.3)).epsilon(1e-12));
  }
  CHECK(lower_bound(6, ProcessParams(0.5, 0.2)) == doctest::Approx(std::log(2.0)).epsilon(1e-12));

  // sandwich at (0.3, 0.1)
  const ProcessParams params(0.3, 0.1);
  const double l8 = lower_bound(8, params);
  const double l12 = lower_bound(12, params);
  const double c12 = conditional_entropy(12, params);
  const double c8 = conditional_entropy(8, params);
  CHECK(l8 <= l12 + 1e-12);
  CHECK(l12 <= c12 + 1e-12);
  CHECK(c12 <= c8 + 1e-12);
}

TEST_CASE("bounds_scan invariants on a parameter grid") {
  for (const double p : {0.1, 0.45}) {
    for (const double eps : {0.05, 0.2}) {
      const auto rows = bounds_scan(10, ProcessParams(p, eps));
      for (size_t i = 0; i < rows.size(); ++i) {
        CHECK(rows[i].c_lower <= rows[i].c_upper + 1e-10);
        CHECK(rows[i].h_block >= -1e-12);
        CHECK(rows[i].h_block <= rows[i].n * std::log(2.0) + 1e-12);
        if (i > 0) {
          CHECK(rows[i].c_upper <= rows[i - 1].c_upper + 1e-10);    // concavity of H_N
          CHECK(rows[i].c_lower + 1e-10 >= rows[i - 1].c_lower);
        }
      }
    }
  }
}

TEST_CASE("parallel enumeration is bit-identical to sequential") {
  const ProcessParams params(0.27, 0.13);
  EntropyOptions seq_opts;
  EntropyOptions par_opts;
  par_opts.threads = 4;
  const auto seq_levels = block_entropies(12, params, seq_opts);
  const auto par_levels = block_entropies(12, params, par_opts);
  REQUIRE(seq_levels.size() == par_levels.size());
  for (size_t i = 0; i < seq_levels.size(); ++i) {
    CHECK(seq_levels[i] == par_levels[i]);  // exact equality
  }
}

TEST_CASE("smb_estimate") {
  CHECK_THROWS_AS(smb_estimate(ProcessParams(0.3, 0.1), 999, 1), invalid_input_error);

  // Clean channel: entropy rate is h_b(p).
  const auto clean = smb_estimate(ProcessParams(0.3, 0.0), 1000000, 2024);
  CHECK(std::abs(clean.estimate - binary_entropy(0.3)) < 3 * clean.stderr_);
  CHECK(clean.stderr_ > 0.0);

  const auto fair = smb_estimate(ProcessParams(0.5, 0.1), 1000000, 2024);
  CHECK(std::abs(fair.estimate - std::log(2.0)) < 3 * fair.stderr_);

  // Doubling M shrinks stderr by about 1/sqrt(2).
  const auto short_run = smb_estimate(ProcessParams(0.3, 0.1), 200000, 99);
  const auto long_run = smb_estimate(ProcessParams(0.3, 0.1), 400000, 99);
  const double ratio = long_run.stderr_ / short_run.stderr_;
  CHECK(ratio == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(0.2));

  // Deterministic given the seed.
  const auto again = smb_estimate(ProcessParams(0.3, 0.0), 1000000, 2024);
  CHECK(again.estimate == clean.estimate);
  CHECK(again.stderr_ == clean.stderr_);
}
