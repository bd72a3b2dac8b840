#include "hmp/ising.hpp"

#include <cmath>
#include <vector>

#include "hmp/errors.hpp"

namespace hmp {

IsingParams ising_couplings(const ProcessParams& params, int n, Boundary boundary) {
  if (!(params.p > 0.0 && params.p < 1.0)) {
    throw invalid_input_error("ising_couplings: p must lie strictly inside (0, 1)");
  }
  if (params.eps == 0.0) {
    throw infinite_coupling_error("ising_couplings: eps = 0 maps to K = infinity");
  }
  if (n < 1) throw invalid_input_error("ising_couplings: n must be positive");
  IsingParams out;
  out.j = 0.5 * std::log((1.0 - params.p) / params.p);
  out.k = 0.5 * std::log((1.0 - params.eps) / params.eps);
  out.boundary = boundary;
  out.n = n;
  const double cosh_j = 2.0 * std::cosh(out.j);
  const double cosh_k = 2.0 * std::cosh(out.k);
  out.a0 = boundary == Boundary::open ? 0.5 * std::pow(cosh_j, -(n - 1))
                                      : std::pow(cosh_j, -n);
  out.a1 = std::pow(cosh_k, -n);
  return out;
}

namespace {

int bond_sum(std::uint64_t s, int n, Boundary boundary) {
  // sum of s_{i+1} s_i over bonds: agreements minus disagreements.
  const std::uint64_t diff = s ^ (s >> 1);
  int bonds, disagree;
  if (boundary == Boundary::open) {
    bonds = n - 1;
    disagree = __builtin_popcountll(diff & ((std::uint64_t{1} << (n - 1)) - 1));
  } else {
    bonds = n;
    const std::uint64_t wrap = (s ^ (s >> (n - 1))) & 1;
    disagree = __builtin_popcountll(diff & ((std::uint64_t{1} << (n - 1)) - 1)) +
               static_cast<int>(wrap);
  }
  return bonds - 2 * disagree;
}

}  // namespace

double ising_z(const BitSequence& r, const IsingParams& ising, int cap) {
  const int n = r.size();
  if (n != ising.n) throw invalid_input_error("ising_z: sequence length differs from couplings");
  if (n > cap) throw resource_limit_error("ising_z: N exceeds brute-force cap");
  // exp lookup over integer spin sums
  std::vector<double> ej(static_cast<size_t>(2 * n) + 1), ek(static_cast<size_t>(2 * n) + 1);
  for (int v = -n; v <= n; ++v) {
    ej[static_cast<size_t>(v + n)] = std::exp(ising.j * v);
    ek[static_cast<size_t>(v + n)] = std::exp(ising.k * v);
  }
  const std::uint64_t r_index = r.to_index();
  double total = 0.0;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
    const int bonds = bond_sum(s, n, ising.boundary);
    const int field = n - 2 * __builtin_popcountll((s ^ r_index) & ((std::uint64_t{1} << n) - 1));
    total += ej[static_cast<size_t>(bonds + n)] * ek[static_cast<size_t>(field + n)];
  }
  return total;
}

double ising_z_low_order(const BitSequence& r, const IsingParams& ising, int order) {
  if (order < 0 || order > 2) {
    throw unsupported_order_error("ising_z_low_order: order must be 0, 1 or 2");
  }
  if (ising.boundary != Boundary::periodic) {
    throw invalid_input_error("ising_z_low_order: periodic boundary required");
  }
  const int n = r.size();
  if (n != ising.n) {
    throw invalid_input_error("ising_z_low_order: sequence length differs from couplings");
  }
  if (n < 3 || (order == 2 && n < 5)) {
    throw invalid_input_error("ising_z_low_order: chain too short for requested order");
  }
  const double j = ising.j;
  const double k = ising.k;
  const auto at = [&](int i) { return r[((i % n) + n) % n]; };
  double bond_energy = 0.0;
  for (int i = 0; i < n; ++i) bond_energy += at(i) * at(i + 1);
  const double z0 = std::exp(n * k) * std::exp(j * bond_energy);
  double total = z0;
  if (order >= 1) {
    double sum1 = 0.0;
    for (int i = 0; i < n; ++i) {
      sum1 += std::exp(-2.0 * j * at(i) * (at(i - 1) + at(i + 1)));
    }
    total += z0 * std::exp(-2.0 * k) * sum1;
  }
  if (order >= 2) {
    // class a: adjacent flipped pair (i, i+1)
    double sum2a = 0.0;
    for (int i = 0; i < n; ++i) {
      sum2a += std::exp(-2.0 * j * (at(i) * at(i - 1) + at(i + 1) * at(i + 2)));
    }
    // class b: non-adjacent pair, N(N-3)/2 unordered terms
    double sum2b = 0.0;
    for (int i = 0; i < n; ++i) {
      for (int m = 0; m < n; ++m) {
        if (m == i || m == (i + 1) % n || m == (i + n - 1) % n) continue;
        sum2b += std::exp(-2.0 * j * at(i) * (at(i - 1) + at(i + 1)) -
                          2.0 * j * at(m) * (at(m - 1) + at(m + 1)));
      }
    }
    total += z0 * std::exp(-4.0 * k) * (sum2a + 0.5 * sum2b);
  }
  return total;
}

double q_reference(const BitSequence& r, const ProcessParams& params, Boundary boundary,
                   int cap) {
  if (boundary == Boundary::open) return observed_prob_brute(r, params, cap);
  const int n = r.size();
  if (n > cap) throw resource_limit_error("q_reference: N exceeds brute-force cap");
  std::vector<double> wp(static_cast<size_t>(n) + 1), we(static_cast<size_t>(n) + 1);
  for (int m = 0; m <= n; ++m) {
    double v = 1.0;
    for (int i = 0; i < m; ++i) v *= 1.0 - params.p;
    for (int i = 0; i < n - m; ++i) v *= params.p;
    wp[static_cast<size_t>(m)] = v;
  }
  for (int g = 0; g <= n; ++g) {
    double v = 1.0;
    for (int i = 0; i < g; ++i) v *= 1.0 - params.eps;
    for (int i = 0; i < n - g; ++i) v *= params.eps;
    we[static_cast<size_t>(g)] = v;
  }
  const std::uint64_t r_index = r.to_index();
  double total = 0.0;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
    const std::uint64_t diff = s ^ (s >> 1);
    const std::uint64_t wrap = (s ^ (s >> (n - 1))) & 1;
    const int disagree = __builtin_popcountll(diff & ((std::uint64_t{1} << (n - 1)) - 1)) +
                         static_cast<int>(wrap);
    const int agree_obs = n - __builtin_popcountll((s ^ r_index) & ((std::uint64_t{1} << n) - 1));
    total += wp[static_cast<size_t>(n - disagree)] * we[static_cast<size_t>(agree_obs)];
  }
  return total;
}

}  // namespace hmp
