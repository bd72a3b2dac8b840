#include "hmp/expansion.hpp"

#include <algorithm>

#include <nlohmann/json.hpp>

#include "hmp/errors.hpp"

namespace hmp {

namespace {

std::vector<std::vector<BigInt>> binomial_table(int n) {
  std::vector<std::vector<BigInt>> c(static_cast<size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) {
    c[static_cast<size_t>(i)].resize(static_cast<size_t>(i) + 1, BigInt(1));
    for (int j = 1; j < i; ++j) {
      c[static_cast<size_t>(i)][static_cast<size_t>(j)] =
          c[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)] +
          c[static_cast<size_t>(i - 1)][static_cast<size_t>(j)];
    }
  }
  return c;
}

}  // namespace

int BivariatePoly::eps_degree() const {
  for (int i = static_cast<int>(eps_slices.size()) - 1; i >= 0; --i) {
    if (!eps_slices[static_cast<size_t>(i)].is_zero()) return i;
  }
  return -1;
}

int BivariatePoly::p_degree() const {
  int deg = -1;
  for (const auto& slice : eps_slices) deg = std::max(deg, slice.degree());
  return deg;
}

BigRational BivariatePoly::eval(const BigRational& p, const BigRational& eps) const {
  BigRational acc(0);
  for (auto it = eps_slices.rbegin(); it != eps_slices.rend(); ++it) {
    acc = acc * eps + it->eval(p);
  }
  return acc;
}

BivariatePoly z_polynomial(const BitSequence& r, int cap) {
  const int n = r.size();
  if (n > cap) {
    throw resource_limit_error("z_polynomial: N exceeds the symbolic cap");
  }
  // Count hidden configurations by (adjacent agreements m, observation
  // agreements g); the weight of each class is
  //   (1/2) (1-p)^m p^(N-1-m) (1-eps)^g eps^(N-g).
  std::vector<std::vector<long long>> counts(
      static_cast<size_t>(n), std::vector<long long>(static_cast<size_t>(n) + 1, 0));
  const std::uint64_t r_index = r.to_index();
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;
  for (std::uint64_t s = 0; s <= full; ++s) {
    const int m = n - 1 - __builtin_popcountll((s ^ (s >> 1)) & (full >> 1));
    const int g = n - __builtin_popcountll((s ^ r_index) & full);
    ++counts[static_cast<size_t>(m)][static_cast<size_t>(g)];
  }

  const auto binom = binomial_table(n);
  // (1-eps)^g eps^(N-g) contributes binom(g, t) (-1)^t to eps^(N-g+t).
  // Accumulate integer weights w[m][i], then expand the p-monomials.
  std::vector<std::vector<BigInt>> w(
      static_cast<size_t>(n), std::vector<BigInt>(static_cast<size_t>(n) + 1, BigInt(0)));
  for (int m = 0; m < n; ++m) {
    for (int g = 0; g <= n; ++g) {
      const long long c = counts[static_cast<size_t>(m)][static_cast<size_t>(g)];
      if (c == 0) continue;
      for (int t = 0; t <= g; ++t) {
        const int i = n - g + t;
        BigInt term = binom[static_cast<size_t>(g)][static_cast<size_t>(t)] *
                      static_cast<long>(c);
        if (t & 1) term = -term;
        w[static_cast<size_t>(m)][static_cast<size_t>(i)] += term;
      }
    }
  }

  // p-monomials (1-p)^m p^(N-1-m) expanded once per m.
  std::vector<Polynomial> p_weight(static_cast<size_t>(n));
  for (int m = 0; m < n; ++m) {
    p_weight[static_cast<size_t>(m)] =
        Polynomial::one_minus_x_pow(m).shifted(n - 1 - m);
  }

  BivariatePoly out;
  out.eps_slices.resize(static_cast<size_t>(n) + 1);
  const BigRational half = make_rational(1, 2);
  for (int i = 0; i <= n; ++i) {
    Polynomial slice;
    for (int m = 0; m < n; ++m) {
      const BigInt& weight = w[static_cast<size_t>(m)][static_cast<size_t>(i)];
      if (weight == 0) continue;
      slice += p_weight[static_cast<size_t>(m)].scaled(BigRational(weight));
    }
    out.eps_slices[static_cast<size_t>(i)] = slice.scaled(half);
  }
  return out;
}

namespace {

// Orbit of R under global flip and reversal; Q(R) is invariant under both.
struct Orbit {
  std::uint64_t representative;
  int multiplicity;
};

std::uint64_t reverse_bits(std::uint64_t v, int n) {
  std::uint64_t out = 0;
  for (int i = 0; i < n; ++i) {
    if ((v >> i) & 1) out |= std::uint64_t{1} << (n - 1 - i);
  }
  return out;
}

std::vector<Orbit> observed_orbits(int n, bool use_symmetry) {
  const std::uint64_t count = std::uint64_t{1} << n;
  const std::uint64_t mask = count - 1;
  std::vector<Orbit> orbits;
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    if (!use_symmetry) {
      orbits.push_back({idx, 1});
      continue;
    }
    const std::uint64_t rev = reverse_bits(idx, n);
    std::uint64_t images[4] = {idx, (~idx) & mask, rev, (~rev) & mask};
    std::sort(images, images + 4);
    if (images[0] != idx) continue;
    int mult = 1;
    for (int i = 1; i < 4; ++i) {
      if (images[i] != images[i - 1]) ++mult;
    }
    orbits.push_back({idx, mult});
  }
  return orbits;
}

}  // namespace

EpsSeries block_entropy_series(int n, int k, const ExpansionOptions& opts) {
  if (n < 1) throw invalid_input_error("block_entropy_series: n must be positive");
  if (k < 0) throw invalid_input_error("block_entropy_series: negative order");
  if (n > opts.cap) {
    throw resource_limit_error("block_entropy_series: N exceeds the symbolic cap");
  }
  EpsSeries acc(k);
  for (const Orbit& orbit : observed_orbits(n, opts.use_symmetry)) {
    const BivariatePoly q = z_polynomial(BitSequence::from_index(orbit.representative, n), opts.cap);
    EpsSeries q_series(k);
    for (int i = 0; i <= std::min(n, k); ++i) {
      const Polynomial& slice = q.eps_slices[static_cast<size_t>(i)];
      if (!slice.is_zero()) {
        q_series.set_coeff(i, LogLinearExpr::pure(RationalFunction(slice)));
      }
    }
    const EpsSeries log_q = series_log(q_series, k);
    EpsSeries contribution = series_multiply(q_series, log_q, k);
    if (orbit.multiplicity != 1) {
      contribution = contribution.scaled(BigRational(orbit.multiplicity));
    }
    acc += contribution;
  }
  return -acc;
}

EpsSeries conditional_series(int n, int k, const ExpansionOptions& opts) {
  if (n < 2) throw invalid_input_error("conditional_series: n must be at least 2");
  return block_entropy_series(n, k, opts) - block_entropy_series(n - 1, k, opts);
}

bool ConjectureReport::all_ok() const {
  for (const auto& order : orders) {
    if (!order.matches_conjecture || !order.table_match) return false;
  }
  return true;
}

ConjectureReport verify_conjecture(int k_max, int n_max, const CoefficientTable& table,
                                   const ExpansionOptions& opts) {
  if (k_max < 0 || k_max > CoefficientTable::max_order) {
    throw unsupported_order_error("verify_conjecture: k_max must lie in 0..11");
  }
  const int needed = (k_max + 4) / 2 + 1;
  if (n_max < needed) {
    throw invalid_input_error("verify_conjecture: n_max too small to observe settling");
  }
  if (n_max > opts.cap) {
    throw resource_limit_error("verify_conjecture: n_max exceeds the symbolic cap");
  }

  std::vector<EpsSeries> blocks;
  blocks.reserve(static_cast<size_t>(n_max));
  for (int n = 1; n <= n_max; ++n) {
    blocks.push_back(block_entropy_series(n, k_max, opts));
  }
  std::vector<EpsSeries> conditionals;
  conditionals.reserve(static_cast<size_t>(n_max) - 1);
  for (int n = 2; n <= n_max; ++n) {
    conditionals.push_back(blocks[static_cast<size_t>(n - 1)] - blocks[static_cast<size_t>(n - 2)]);
  }

  ConjectureReport report;
  report.k_max = k_max;
  report.n_max = n_max;
  for (int k = 0; k <= k_max; ++k) {
    OrderReport order;
    order.k = k;
    for (int n = 2; n <= n_max; ++n) {
      order.c_by_n.emplace_back(n, conditionals[static_cast<size_t>(n - 2)].coeff(k));
    }
    order.settled = order.c_by_n.back().second;
    int settling = n_max;
    while (settling > 2 &&
           order.c_by_n[static_cast<size_t>(settling - 3)].second == order.settled) {
      --settling;
    }
    order.settling_n = settling;
    order.conjectured_n = (k + 4) / 2;  // ceil((k+3)/2)
    order.matches_conjecture = order.settling_n == order.conjectured_n;
    order.table_match = loglinear_equal(order.settled, coefficient_exact(k, table));
    report.orders.push_back(std::move(order));
  }
  return report;
}

namespace {

nlohmann::json polynomial_to_json(const Polynomial& poly) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const auto& c : poly.coeffs()) coeffs.push_back(to_string(c));
  return coeffs;
}

nlohmann::json ratfunc_to_json(const RationalFunction& f) {
  return {{"num", polynomial_to_json(f.num())}, {"den", polynomial_to_json(f.den())}};
}

nlohmann::json loglinear_to_json(const LogLinearExpr& e) {
  return {{"const", ratfunc_to_json(e.c_const)},
          {"log_p", ratfunc_to_json(e.c_logp)},
          {"log_1mp", ratfunc_to_json(e.c_log1mp)},
          {"log_2", ratfunc_to_json(e.c_log2)},
          {"display", e.to_string()}};
}

}  // namespace

std::string conjecture_report_to_json(const ConjectureReport& report) {
  nlohmann::json orders = nlohmann::json::array();
  for (const auto& order : report.orders) {
    nlohmann::json by_n = nlohmann::json::array();
    for (const auto& [n, value] : order.c_by_n) {
      by_n.push_back({{"n", n}, {"coefficient", loglinear_to_json(value)}});
    }
    orders.push_back({{"k", order.k},
                      {"settling_n", order.settling_n},
                      {"conjectured_n", order.conjectured_n},
                      {"matches_conjecture", order.matches_conjecture},
                      {"table_match", order.table_match},
                      {"settled", loglinear_to_json(order.settled)},
                      {"c_by_n", by_n}});
  }
  const nlohmann::json doc = {{"k_max", report.k_max},
                              {"n_max", report.n_max},
                              {"all_ok", report.all_ok()},
                              {"orders", orders}};
  return doc.dump(2);
}

BigRational free_element_of(const RationalFunction& h, int k) {
  if (k < 2) throw invalid_input_error("free_element: order must be at least 2");
  // (p(1-p))^(2(k-1))
  const Polynomial weight = Polynomial({0, 1, -1}).pow(2 * (k - 1));
  const Polynomial cleared = (h.num() * weight).divide_exact(h.den());
  return cleared.constant_term();
}

BigRational free_element(int k, const CoefficientTable& table) {
  if (k < 3 || k > CoefficientTable::max_order) {
    throw unsupported_order_error("free_element: order must lie in 3..11");
  }
  return free_element_of(coefficient_exact(k, table).c_const, k);
}

}  // namespace hmp
