#pragma once

#include <cstdint>
#include <vector>

namespace hmp {

// Pairwise-tree accumulator: streaming values are combined like the leaves
// of a balanced binary tree (binary-counter carries), so a stream of 2^k
// values reduces in exactly the subtree order. This makes chunked/parallel
// enumeration bit-identical to the sequential pass: per-chunk totals are
// subtree sums and the cross-chunk combine replays the same tree.
class PairwiseSum {
 public:
  void add(double value) {
    std::uint64_t level = 0;
    while (level < filled_.size() && filled_[level]) {
      value += slots_[level];
      filled_[level] = false;
      ++level;
    }
    if (level == filled_.size()) {
      slots_.push_back(value);
      filled_.push_back(true);
    } else {
      slots_[level] = value;
      filled_[level] = true;
    }
  }

  // Folds leftover slots from the smallest level up (deterministic order).
  double total() const {
    double out = 0.0;
    for (std::size_t i = 0; i < slots_.size(); ++i) {
      if (filled_[i]) out += slots_[i];
    }
    return out;
  }

 private:
  std::vector<double> slots_;
  std::vector<bool> filled_;
};

}  // namespace hmp
