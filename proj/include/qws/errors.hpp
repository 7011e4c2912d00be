#pragma once

#include <stdexcept>

namespace qws {

// Bad construction parameters or malformed run configuration.
struct invalid_parameter : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// State vector used with a graph of a different arc count.
struct dimension_mismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A numerical consistency check failed (non-unitary operator, defective
// block, residual beyond tolerance).
struct numerical_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// File read/write failure.
struct io_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace qws
