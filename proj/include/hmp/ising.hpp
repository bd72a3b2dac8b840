#pragma once

#include "hmp/process.hpp"

namespace hmp {

enum class Boundary { open, periodic };

// Couplings of the equivalent Ising chain in a random field:
// e^{2J} = (1-p)/p, e^{2K} = (1-eps)/eps. a0 and a1 are the
// normalization constants with A = a0 * a1 and Q(R) = A * Z(R) under the
// matching boundary convention; both depend on the chain length.
struct IsingParams {
  double j = 0.0;
  double k = 0.0;
  double a0 = 0.0;
  double a1 = 0.0;
  Boundary boundary = Boundary::open;
  int n = 0;
};

// Requires 0 < p < 1 and 0 < eps < 1/2; eps = 0 would mean K = infinity
// and raises infinite_coupling_error (use the probability path instead).
IsingParams ising_couplings(const ProcessParams& params, int n,
                            Boundary boundary = Boundary::open);

// Z(R) = sum_S exp(J sum s_{i+1} s_i + K sum r_i s_i), with the J-sum
// over N-1 bonds (open) or N bonds (periodic).
double ising_z(const BitSequence& r, const IsingParams& ising, int cap = brute_force_cap());

// Truncation of Z(R) to hidden configurations with at most `order` spins
// flipped against the field: order 0 keeps S = R, order 1 adds the N
// single-flip terms, order 2 adds the adjacent and non-adjacent pair
// classes. Periodic boundary only; order 2 needs N >= 5.
double ising_z_low_order(const BitSequence& r, const IsingParams& ising, int order);

// Probability-route reference for A * Z(R): the open chain gives the
// process probability Q(R); the periodic chain gives the circular-weight
// analog sum_S (1-p)^m p^{N-m} (1-eps)^g eps^{N-g} whose total over R is
// 1 + (1-2p)^N rather than 1.
double q_reference(const BitSequence& r, const ProcessParams& params, Boundary boundary,
                   int cap = brute_force_cap());

}  // namespace hmp
