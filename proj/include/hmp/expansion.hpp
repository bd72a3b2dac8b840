#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hmp/eps_series.hpp"
#include "hmp/process.hpp"
#include "hmp/series_table.hpp"

namespace hmp {

// Q(R) as an exact bivariate polynomial: eps_slices[i] is the coefficient
// of eps^i, a polynomial in p of degree <= N-1. The 1/2 start-symbol
// prefactor is included, so the slices sum the hidden configurations of
// the joint probability and sum_R value = 1 identically.
struct BivariatePoly {
  std::vector<Polynomial> eps_slices;

  int eps_degree() const;
  int p_degree() const;
  BigRational eval(const BigRational& p, const BigRational& eps) const;
};

// Symbolic chain-length cap mirrors the computed range the coefficients
// were established for; callers may raise it explicitly (exponential cost).
constexpr int default_symbolic_cap = 8;

struct ExpansionOptions {
  int cap = default_symbolic_cap;
  // Group observed sequences into orbits of global flip + reversal and
  // weight representatives by orbit size.
  bool use_symmetry = true;
};

BivariatePoly z_polynomial(const BitSequence& r, int cap = default_symbolic_cap);

// Exact expansion of H_N = -sum_R Q log Q in eps through order k:
// coefficient i of the result is the exact LogLinearExpr for eps^i.
EpsSeries block_entropy_series(int n, int k, const ExpansionOptions& opts = {});

// C_N = H_N - H_{N-1} expanded through order k; n >= 2.
EpsSeries conditional_series(int n, int k, const ExpansionOptions& opts = {});

struct OrderReport {
  int k = 0;
  // (N, exact C_N^(k)) for N = 2..n_max
  std::vector<std::pair<int, LogLinearExpr>> c_by_n;
  LogLinearExpr settled;
  int settling_n = 0;     // smallest N with C_M^(k) identical for all M >= N
  int conjectured_n = 0;  // ceil((k+3)/2)
  bool matches_conjecture = false;
  bool table_match = false;  // settled value equals the stored H^(k)
};

struct ConjectureReport {
  int k_max = 0;
  int n_max = 0;
  std::vector<OrderReport> orders;

  bool all_ok() const;
};

// Computes C_N^(k) for all k <= k_max, N <= n_max, detects the settling
// length per order and checks the settled value against the coefficient
// table. Requires n_max >= ceil((k_max+3)/2) + 1 so settling is
// observable, and k_max <= 11 (the tabulated range).
ConjectureReport verify_conjecture(int k_max, int n_max,
                                   const CoefficientTable& table = coefficient_table(),
                                   const ExpansionOptions& opts = {});

// JSON rendering of the report (exact coefficients as integer-string
// polynomial arrays plus display strings).
std::string conjecture_report_to_json(const ConjectureReport& report);

// Constant term of (p(1-p))^(2(k-1)) * h at p = 0, for a pure-rational
// order-k coefficient h. The product must clear the denominator exactly.
BigRational free_element_of(const RationalFunction& h, int k);

// Free element of the tabulated H^(k); 3 <= k <= 11.
BigRational free_element(int k, const CoefficientTable& table = coefficient_table());

}  // namespace hmp
