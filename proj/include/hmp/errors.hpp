#pragma once

#include <stdexcept>
#include <string>

namespace hmp {

// Invalid argument values or malformed inputs (bad parameter range,
// length mismatch, zero denominator, ...).
class invalid_input_error : public std::invalid_argument {
 public:
  explicit invalid_input_error(const std::string& what)
      : std::invalid_argument(what) {}
};

// An enumeration was requested beyond the configured brute-force cap.
class resource_limit_error : public std::runtime_error {
 public:
  explicit resource_limit_error(const std::string& what)
      : std::runtime_error(what) {}
};

// Expansion order outside the supported range.
class unsupported_order_error : public std::invalid_argument {
 public:
  explicit unsupported_order_error(const std::string& what)
      : std::invalid_argument(what) {}
};

// Evaluation at a pole of a rational coefficient.
class evaluation_pole_error : public std::runtime_error {
 public:
  explicit evaluation_pole_error(const std::string& what)
      : std::runtime_error(what) {}
};

// eps = 0 maps to an infinite Ising field; the probability path must be
// used instead.
class infinite_coupling_error : public std::runtime_error {
 public:
  explicit infinite_coupling_error(const std::string& what)
      : std::runtime_error(what) {}
};

// A product left the {1, log p, log(1-p), log 2} coefficient ring.
// Signals a logic bug in the caller, not bad user input.
class ring_error : public std::logic_error {
 public:
  explicit ring_error(const std::string& what) : std::logic_error(what) {}
};

// Ratio fit could not be formed (zero coefficient in range).
class degenerate_ratio_error : public std::runtime_error {
 public:
  explicit degenerate_ratio_error(const std::string& what)
      : std::runtime_error(what) {}
};

// Ratio fit failed to produce a usable solution.
class no_convergence_error : public std::runtime_error {
 public:
  explicit no_convergence_error(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace hmp
