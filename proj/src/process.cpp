#include "hmp/process.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>

#include "hmp/errors.hpp"

namespace hmp {

namespace {

double pow_int(double base, int exponent) {
  double out = 1.0;
  for (int i = 0; i < exponent; ++i) out *= base;
  return out;
}

}  // namespace

ProcessParams::ProcessParams(double p_, double eps_) : p(p_), eps(eps_) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw invalid_input_error("params: p must lie in [0, 1]");
  }
  if (!(eps >= 0.0 && eps < 0.5)) {
    throw invalid_input_error("params: eps must lie in [0, 1/2)");
  }
}

BitSequence::BitSequence(std::vector<int> symbols) : symbols_(std::move(symbols)) {
  if (symbols_.empty()) throw invalid_input_error("sequence: empty");
  for (int s : symbols_) {
    if (s != 1 && s != -1) throw invalid_input_error("sequence: symbols must be +1 or -1");
  }
}

BitSequence BitSequence::from_index(std::uint64_t index, int length) {
  if (length < 1 || length > 63) throw invalid_input_error("sequence: bad length");
  std::vector<int> symbols(static_cast<size_t>(length));
  for (int i = 0; i < length; ++i) {
    symbols[static_cast<size_t>(i)] = (index >> i) & 1 ? 1 : -1;
  }
  return BitSequence(std::move(symbols));
}

BitSequence BitSequence::flipped() const {
  std::vector<int> symbols = symbols_;
  for (int& s : symbols) s = -s;
  return BitSequence(std::move(symbols));
}

BitSequence BitSequence::reversed() const {
  return BitSequence(std::vector<int>(symbols_.rbegin(), symbols_.rend()));
}

std::uint64_t BitSequence::to_index() const {
  std::uint64_t index = 0;
  for (int i = 0; i < size(); ++i) {
    if (symbols_[static_cast<size_t>(i)] == 1) index |= (std::uint64_t{1} << i);
  }
  return index;
}

int BitSequence::adjacent_agreements() const {
  int count = 0;
  for (int i = 0; i + 1 < size(); ++i) {
    if (symbols_[static_cast<size_t>(i)] == symbols_[static_cast<size_t>(i) + 1]) ++count;
  }
  return count;
}

int BitSequence::agreements_with(const BitSequence& other) const {
  if (other.size() != size()) throw invalid_input_error("sequence: length mismatch");
  int count = 0;
  for (int i = 0; i < size(); ++i) {
    if (symbols_[static_cast<size_t>(i)] == other.symbols_[static_cast<size_t>(i)]) ++count;
  }
  return count;
}

std::string BitSequence::to_string() const {
  std::string out;
  out.reserve(symbols_.size());
  for (int s : symbols_) out.push_back(s == 1 ? '+' : '-');
  return out;
}

int brute_force_cap() {
  static const int cap = [] {
    if (const char* env = std::getenv("HMP_MAX_N")) {
      const int v = std::atoi(env);
      if (v >= 1) return std::min(v, 30);
    }
    return 20;
  }();
  return cap;
}

double markov_prob(const BitSequence& s, double p) {
  if (!(p > 0.0 && p < 1.0)) {
    throw invalid_input_error("markov_prob: p must lie strictly inside (0, 1)");
  }
  const int agree = s.adjacent_agreements();
  const int flips = s.size() - 1 - agree;
  return 0.5 * pow_int(1.0 - p, agree) * pow_int(p, flips);
}

double emission_prob(const BitSequence& r, const BitSequence& s, double eps) {
  if (r.size() != s.size()) throw invalid_input_error("emission_prob: length mismatch");
  const int agree = r.agreements_with(s);
  return pow_int(1.0 - eps, agree) * pow_int(eps, r.size() - agree);
}

double observed_prob_brute(const BitSequence& r, const ProcessParams& params, int cap) {
  const int n = r.size();
  if (n > cap) {
    throw resource_limit_error("observed_prob_brute: N exceeds brute-force cap");
  }
  // Power tables keep the 2^N loop cheap; pow_int handles the 0^0 = 1
  // limits at boundary parameters.
  std::vector<double> wp(static_cast<size_t>(n)), we(static_cast<size_t>(n) + 1);
  for (int m = 0; m < n; ++m) {
    wp[static_cast<size_t>(m)] = pow_int(1.0 - params.p, m) * pow_int(params.p, n - 1 - m);
  }
  for (int g = 0; g <= n; ++g) {
    we[static_cast<size_t>(g)] = pow_int(1.0 - params.eps, g) * pow_int(params.eps, n - g);
  }
  double total = 0.0;
  const std::uint64_t r_index = r.to_index();
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
    const int agree_adj = n - 1 - __builtin_popcountll((s ^ (s >> 1)) & ((std::uint64_t{1} << (n - 1)) - 1));
    const int agree_obs = n - __builtin_popcountll((s ^ r_index) & ((std::uint64_t{1} << n) - 1));
    total += wp[static_cast<size_t>(agree_adj)] * we[static_cast<size_t>(agree_obs)];
  }
  return 0.5 * total;
}

double observed_prob_forward(const BitSequence& r, const ProcessParams& params) {
  const double p = params.p;
  const double eps = params.eps;
  // alpha[s] over s in {+1 -> index 1, -1 -> index 0}
  double a0 = 0.5 * (r[0] == -1 ? 1.0 - eps : eps);
  double a1 = 0.5 * (r[0] == 1 ? 1.0 - eps : eps);
  double log_q = 0.0;
  {
    const double c = a0 + a1;
    if (c == 0.0) return -std::numeric_limits<double>::infinity();
    a0 /= c;
    a1 /= c;
    log_q += std::log(c);
  }
  for (int i = 1; i < r.size(); ++i) {
    const double b0 = (1.0 - p) * a0 + p * a1;
    const double b1 = p * a0 + (1.0 - p) * a1;
    a0 = (r[i] == -1 ? 1.0 - eps : eps) * b0;
    a1 = (r[i] == 1 ? 1.0 - eps : eps) * b1;
    const double c = a0 + a1;
    if (c == 0.0) return -std::numeric_limits<double>::infinity();
    a0 /= c;
    a1 /= c;
    log_q += std::log(c);
  }
  return log_q;
}

std::pair<BitSequence, BitSequence> sample(const ProcessParams& params, int length,
                                           std::uint64_t seed) {
  if (length < 1) throw invalid_input_error("sample: length must be positive");
  Rng rng(seed);
  std::vector<int> s(static_cast<size_t>(length));
  std::vector<int> r(static_cast<size_t>(length));
  int cur = rng.bernoulli(0.5) ? 1 : -1;
  for (int i = 0; i < length; ++i) {
    if (i > 0 && rng.bernoulli(params.p)) cur = -cur;
    s[static_cast<size_t>(i)] = cur;
    r[static_cast<size_t>(i)] = rng.bernoulli(params.eps) ? -cur : cur;
  }
  return {BitSequence(std::move(s)), BitSequence(std::move(r))};
}

}  // namespace hmp
