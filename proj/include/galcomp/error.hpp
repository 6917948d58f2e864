#pragma once

#include <stdexcept>
#include <string>

namespace galcomp {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands live on different numbers of points.
class DegreeMismatch : public Error {
 public:
  using Error::Error;
};

/// Malformed input: bad permutation data, a set that is not a union of double
/// cosets, unknown labels, unparsable documents.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// A configurable size cap (group order, compositum count, polynomial degree)
/// was exceeded.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// An operation was called outside its precondition (system not closed, not
/// connected, pair not composable).
class PreconditionFailed : public Error {
 public:
  using Error::Error;
};

/// A statement that holds for every closed compositum system failed. Only an
/// implementation bug can raise this.
class TheoremViolation : public Error {
 public:
  using Error::Error;
};

/// The double-coset model and the number-field model disagree.
class OracleMismatch : public Error {
 public:
  using Error::Error;
};

/// A tensor algebra over the rationals has a nonzero radical.
class SemisimplicityFailure : public Error {
 public:
  using Error::Error;
};

/// Internal consistency check failed (weak rigidity, idempotent checks,
/// exhausted primitive-element retries).
class InternalInconsistency : public Error {
 public:
  using Error::Error;
};

}  // namespace galcomp
