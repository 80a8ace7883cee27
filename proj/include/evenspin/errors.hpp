#ifndef EVENSPIN_ERRORS_HPP
#define EVENSPIN_ERRORS_HPP

#include <stdexcept>

namespace evenspin {

/// Raised for malformed or out-of-range input. The CLI maps it to exit code 1.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a computed value fails to reproduce a published statement.
/// The CLI maps it to exit code 2.
class VerificationFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace evenspin

#endif  // EVENSPIN_ERRORS_HPP
