#pragma once

#include <cstdint>
#include <random>

namespace hmp {

// Seeded generator with an implementation-pinned uniform mapping so that
// identical seeds give identical streams on every platform (std::
// distributions are not specified bit-exactly). Parallel use: derive
// per-worker seeds with derive_seed(seed, worker_index); never share one
// Rng across threads.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  // Uniform in [0, 1) with 53 random bits.
  double uniform01() {
    return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
  }

  bool bernoulli(double prob) { return uniform01() < prob; }

  std::uint64_t next() { return gen_(); }

 private:
  std::mt19937_64 gen_;
};

// Split rule: worker i uses seed ^ i (workers must use distinct indices).
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t worker_index) {
  return seed ^ worker_index;
}

}  // namespace hmp
