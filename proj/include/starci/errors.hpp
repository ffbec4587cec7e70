#ifndef STARCI_ERRORS_HPP
#define STARCI_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace starci {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Caller violated an operation's contract: arity/field mismatch, index or
/// parameter out of range.
class UsageError : public Error {
 public:
  using Error::Error;
};

/// Input is structurally valid but degenerate, e.g. the zero linear form.
class DegenerateInputError : public Error {
 public:
  using Error::Error;
};

/// A mathematical precondition failed (non-generic arrangement, invalid
/// Schmitt-Vogel partition, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Seeded fixture generation ran out of retries.
class GenerationError : public Error {
 public:
  using Error::Error;
};

/// A computation exceeded its time budget. Never carries a verdict.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace starci

#endif  // STARCI_ERRORS_HPP
