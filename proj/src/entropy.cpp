#include "hmp/entropy.hpp"

#include <atomic>
#include <cmath>
#include <thread>

#include "hmp/errors.hpp"
#include "hmp/summation.hpp"

namespace hmp {

namespace {

// Scaled forward state over the hidden spin: prior (pi0, pi1) for the next
// symbol and accumulated log-probability of the prefix.
struct FwdState {
  double pi0 = 0.5;  // s = -1
  double pi1 = 0.5;  // s = +1
  double ls = 0.0;   // ln Q(prefix)
};

// Advance by one observed symbol; returns false when the prefix has
// probability zero (possible only at boundary parameters).
bool fwd_step(FwdState& st, int r, double p, double eps, double* step_log = nullptr) {
  const double w0 = st.pi0 * (r == -1 ? 1.0 - eps : eps);
  const double w1 = st.pi1 * (r == 1 ? 1.0 - eps : eps);
  const double c = w0 + w1;
  if (c == 0.0) return false;
  const double lc = std::log(c);
  st.ls += lc;
  if (step_log != nullptr) *step_log = lc;
  const double q0 = w0 / c;
  const double q1 = w1 / c;
  st.pi0 = (1.0 - p) * q0 + p * q1;
  st.pi1 = p * q0 + (1.0 - p) * q1;
  return true;
}

// -Q ln Q summed over all observed prefixes, one total per level 1..n.
// acc[d-1] receives the depth-d contributions in DFS order (symbol -1
// first), which pairwise-reduces exactly like a balanced tree.
void dfs_levels(int depth, int n, const FwdState& st, const ProcessParams& params,
                std::vector<PairwiseSum>& acc) {
  for (int sym = -1; sym <= 1; sym += 2) {
    FwdState next = st;
    if (!fwd_step(next, sym, params.p, params.eps)) continue;  // zero prefix: prune
    acc[static_cast<size_t>(depth)].add(-std::exp(next.ls) * next.ls);
    if (depth + 1 < n) dfs_levels(depth + 1, n, next, params, acc);
  }
}

// Per-level sums of -Q ln Q for every initial state, enumerated over all
// 2^d prefixes per level. Chunked over the first split_depth symbols; the
// pairwise combine makes the result independent of threads and chunking.
std::vector<double> entropy_levels(int n, const ProcessParams& params,
                                   const std::vector<FwdState>& inits, int threads) {
  const int split_depth = n > 7 ? 6 : 0;
  const int n_chunks = 1 << split_depth;
  const int n_tasks = static_cast<int>(inits.size()) * n_chunks;

  // Shallow levels (1..split_depth) in one cheap sequential pass.
  std::vector<PairwiseSum> shallow(static_cast<size_t>(split_depth));
  if (split_depth > 0) {
    for (const FwdState& init : inits) {
      dfs_levels(0, split_depth, init, params, shallow);
    }
  }

  // Deep levels per (init, chunk) task.
  std::vector<std::vector<double>> task_totals(static_cast<size_t>(n_tasks));
  const auto run_task = [&](int task) {
    const int init_index = task / n_chunks;
    const int chunk = task % n_chunks;
    FwdState st = inits[static_cast<size_t>(init_index)];
    for (int d = 0; d < split_depth; ++d) {
      if (!fwd_step(st, (chunk >> d) & 1 ? 1 : -1, params.p, params.eps)) return;
    }
    std::vector<PairwiseSum> acc(static_cast<size_t>(n - split_depth));
    dfs_levels(0, n - split_depth, st, params, acc);
    auto& out = task_totals[static_cast<size_t>(task)];
    out.resize(static_cast<size_t>(n - split_depth));
    for (int d = 0; d < n - split_depth; ++d) out[static_cast<size_t>(d)] = acc[static_cast<size_t>(d)].total();
  };

  if (threads > 1 && n_tasks > 1) {
    std::atomic<int> next_task{0};
    std::vector<std::thread> pool;
    const int n_workers = std::min(threads, n_tasks);
    pool.reserve(static_cast<size_t>(n_workers));
    for (int w = 0; w < n_workers; ++w) {
      pool.emplace_back([&] {
        for (int t = next_task.fetch_add(1); t < n_tasks; t = next_task.fetch_add(1)) {
          run_task(t);
        }
      });
    }
    for (auto& th : pool) th.join();
  } else {
    for (int t = 0; t < n_tasks; ++t) run_task(t);
  }

  std::vector<double> levels(static_cast<size_t>(n));
  for (int d = 1; d <= split_depth; ++d) {
    levels[static_cast<size_t>(d - 1)] = shallow[static_cast<size_t>(d - 1)].total();
  }
  for (int d = split_depth + 1; d <= n; ++d) {
    PairwiseSum join;
    for (int t = 0; t < n_tasks; ++t) {
      const auto& totals = task_totals[static_cast<size_t>(t)];
      if (!totals.empty()) join.add(totals[static_cast<size_t>(d - split_depth - 1)]);
    }
    levels[static_cast<size_t>(d - 1)] = join.total();
  }
  return levels;
}

void check_cap(int n, const EntropyOptions& opts, const char* who) {
  if (n < 1) throw invalid_input_error(std::string(who) + ": n must be positive");
  if (n > opts.cap) throw resource_limit_error(std::string(who) + ": N exceeds brute-force cap");
}

std::vector<FwdState> plain_init() { return {FwdState{0.5, 0.5, 0.0}}; }

std::vector<FwdState> joint_init() {
  const double half = std::log(0.5);
  return {FwdState{1.0, 0.0, half}, FwdState{0.0, 1.0, half}};
}

}  // namespace

double block_entropy(int n, const ProcessParams& params, const EntropyOptions& opts) {
  check_cap(n, opts, "block_entropy");
  return entropy_levels(n, params, plain_init(), opts.threads).back();
}

std::vector<double> block_entropies(int n, const ProcessParams& params,
                                    const EntropyOptions& opts) {
  check_cap(n, opts, "block_entropies");
  return entropy_levels(n, params, plain_init(), opts.threads);
}

double conditional_entropy(int n, const ProcessParams& params, const EntropyOptions& opts) {
  if (n < 2) throw invalid_input_error("conditional_entropy: n must be at least 2");
  check_cap(n, opts, "conditional_entropy");
  const auto levels = entropy_levels(n, params, plain_init(), opts.threads);
  return levels[static_cast<size_t>(n - 1)] - levels[static_cast<size_t>(n - 2)];
}

double lower_bound(int n, const ProcessParams& params, const EntropyOptions& opts) {
  if (n < 2) throw invalid_input_error("lower_bound: n must be at least 2");
  check_cap(n, opts, "lower_bound");
  const auto joint = entropy_levels(n, params, joint_init(), opts.threads);
  return joint[static_cast<size_t>(n - 1)] - joint[static_cast<size_t>(n - 2)];
}

std::vector<BoundsReport> bounds_scan(int n, const ProcessParams& params,
                                      const EntropyOptions& opts) {
  if (n < 2) throw invalid_input_error("bounds_scan: n must be at least 2");
  check_cap(n, opts, "bounds_scan");
  const auto plain = entropy_levels(n, params, plain_init(), opts.threads);
  const auto joint = entropy_levels(n, params, joint_init(), opts.threads);
  std::vector<BoundsReport> out;
  out.reserve(static_cast<size_t>(n - 1));
  for (int d = 2; d <= n; ++d) {
    BoundsReport row;
    row.n = d;
    row.h_block = plain[static_cast<size_t>(d - 1)];
    row.c_upper = plain[static_cast<size_t>(d - 1)] - plain[static_cast<size_t>(d - 2)];
    row.c_lower = joint[static_cast<size_t>(d - 1)] - joint[static_cast<size_t>(d - 2)];
    row.params = params;
    out.push_back(row);
  }
  return out;
}

SmbEstimate smb_estimate(const ProcessParams& params, std::int64_t length, std::uint64_t seed) {
  if (length < 1000) throw invalid_input_error("smb_estimate: length must be at least 1000");
  Rng rng(seed);
  FwdState st;
  int spin = rng.bernoulli(0.5) ? 1 : -1;

  const std::int64_t block_len = static_cast<std::int64_t>(std::sqrt(static_cast<double>(length)));
  const std::int64_t n_blocks = length / block_len;
  std::vector<double> block_sums(static_cast<size_t>(n_blocks), 0.0);

  PairwiseSum total;
  for (std::int64_t i = 0; i < length; ++i) {
    if (i > 0 && rng.bernoulli(params.p)) spin = -spin;
    const int obs = rng.bernoulli(params.eps) ? -spin : spin;
    double lc = 0.0;
    fwd_step(st, obs, params.p, params.eps, &lc);
    const double x = -lc;
    total.add(x);
    const std::int64_t b = i / block_len;
    if (b < n_blocks) block_sums[static_cast<size_t>(b)] += x;
  }
  SmbEstimate out;
  out.estimate = total.total() / static_cast<double>(length);

  // Block bootstrap over contiguous blocks; per-step terms are
  // autocorrelated, so an i.i.d. stderr would be overconfident.
  const int n_resamples = 400;
  Rng boot(derive_seed(seed, 1));
  std::vector<double> means(static_cast<size_t>(n_resamples));
  double mean_of_means = 0.0;
  for (int rep = 0; rep < n_resamples; ++rep) {
    double acc = 0.0;
    for (std::int64_t b = 0; b < n_blocks; ++b) {
      const auto pick = static_cast<std::size_t>(boot.next() % static_cast<std::uint64_t>(n_blocks));
      acc += block_sums[pick];
    }
    const double m = acc / static_cast<double>(n_blocks * block_len);
    means[static_cast<size_t>(rep)] = m;
    mean_of_means += m;
  }
  mean_of_means /= n_resamples;
  double var = 0.0;
  for (double m : means) var += (m - mean_of_means) * (m - mean_of_means);
  out.stderr_ = std::sqrt(var / (n_resamples - 1));
  return out;
}

}  // namespace hmp
