#pragma once

#include <stdexcept>

namespace dgla {

// Input failed schema or axiom validation (CLI exit 2).
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A certified check failed (CLI exit 3).
struct VerdictError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The requested truncation cannot support the computation (CLI exit 4).
struct TruncationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace dgla
