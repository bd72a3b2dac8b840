#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "hmp/rng.hpp"

namespace hmp {

// Flip probabilities of the binary symmetric hidden Markov process:
// p for the Markov source, eps for the observation channel.
// Boundary values p in {0, 1} and eps = 0 are legal for the probability
// and sampling paths; the Ising-coupling map rejects them separately.
struct ProcessParams {
  double p = 0.0;
  double eps = 0.0;

  ProcessParams(double p_, double eps_);
};

// Finite sequence over {+1, -1}.
class BitSequence {
 public:
  explicit BitSequence(std::vector<int> symbols);

  // Bit i of index is symbol i: 1 -> +1, 0 -> -1. Fixes the enumeration
  // order used throughout.
  static BitSequence from_index(std::uint64_t index, int length);

  int size() const { return static_cast<int>(symbols_.size()); }
  int operator[](int i) const { return symbols_[static_cast<size_t>(i)]; }
  const std::vector<int>& symbols() const { return symbols_; }

  BitSequence flipped() const;
  BitSequence reversed() const;
  std::uint64_t to_index() const;

  // Number of adjacent equal pairs (open chain, size-1 bonds).
  int adjacent_agreements() const;
  // Number of positions where the two sequences agree.
  int agreements_with(const BitSequence& other) const;

  std::string to_string() const;  // e.g. "++-+"

  bool operator==(const BitSequence& other) const { return symbols_ == other.symbols_; }

 private:
  std::vector<int> symbols_;
};

// Enumeration/brute-force cap: default 20, overridable with env var
// HMP_MAX_N (read once per process).
int brute_force_cap();

// Pr(S) = 1/2 prod Pr(s_i | s_{i-1}). Requires 0 < p < 1.
double markov_prob(const BitSequence& s, double p);

// Pr(R | S) = (1-eps)^{#agree} eps^{#disagree}. Lengths must match.
double emission_prob(const BitSequence& r, const BitSequence& s, double eps);

// Q(R) = sum over all 2^N hidden sequences of Pr(R, S). Exact limits at
// p in {0,1} and eps = 0. N above the cap raises resource_limit_error.
double observed_prob_brute(const BitSequence& r, const ProcessParams& params,
                           int cap = brute_force_cap());

// ln Q(R) by the two-state forward recursion with per-step rescaling.
// Returns -inf for zero-probability sequences at degenerate parameters.
double observed_prob_forward(const BitSequence& r, const ProcessParams& params);

// Draws (S, R): S from the Markov source with uniform start, R through
// the symmetric channel. Deterministic for a given seed.
std::pair<BitSequence, BitSequence> sample(const ProcessParams& params, int length,
                                           std::uint64_t seed);

}  // namespace hmp
