#pragma once

#include <stdexcept>
#include <string>

namespace zk {

// Bad user input: non-dominant weight, parity violation, malformed spec.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An internal identity failed (d∘d ≠ 0, non-integral divided power, ...).
// Under the stated hypotheses this means a bug, never a math finding.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// The requested computation cannot decide the question at this size.
class Inconclusive : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

[[noreturn]] inline void fail_consistency(const std::string& what) {
  throw ConsistencyError(what);
}

}  // namespace zk
