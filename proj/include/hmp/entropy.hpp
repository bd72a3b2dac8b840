#pragma once

#include <cstdint>
#include <vector>

#include "hmp/process.hpp"

namespace hmp {

// Exact finite-N entropies and bounds at one parameter point, in nats.
struct BoundsReport {
  int n = 0;
  double h_block = 0.0;  // H_N
  double c_upper = 0.0;  // C_N = H_N - H_{N-1}
  double c_lower = 0.0;  // conditional entropy given r_1..r_{N-1} and s_1
  ProcessParams params{0.5, 0.0};
};

struct EntropyOptions {
  int cap = brute_force_cap();
  int threads = 1;
};

// H_N = -sum_R Q(R) log Q(R) by exact enumeration (forward recursion per
// prefix; 0 log 0 := 0). Throws resource_limit_error above the cap.
double block_entropy(int n, const ProcessParams& params, const EntropyOptions& opts = {});

// All of H_1..H_n in one enumeration pass.
std::vector<double> block_entropies(int n, const ProcessParams& params,
                                    const EntropyOptions& opts = {});

// C_N = H_N - H_{N-1}; N >= 2.
double conditional_entropy(int n, const ProcessParams& params, const EntropyOptions& opts = {});

// Conditional entropy of r_N given (r_1..r_{N-1}) and the hidden start
// state s_1: a lower bound on the entropy rate, non-decreasing in N.
double lower_bound(int n, const ProcessParams& params, const EntropyOptions& opts = {});

// Reports for N = 2..n in one pass.
std::vector<BoundsReport> bounds_scan(int n, const ProcessParams& params,
                                      const EntropyOptions& opts = {});

struct SmbEstimate {
  double estimate = 0.0;  // -ln Q(R) / M over one sampled trajectory
  double stderr_ = 0.0;   // block bootstrap standard error
};

// Single-trajectory entropy-rate estimate of length M (M >= 1000).
// Deterministic for a given seed; the bootstrap stream is seed ^ 1.
SmbEstimate smb_estimate(const ProcessParams& params, std::int64_t length, std::uint64_t seed);

}  // namespace hmp
