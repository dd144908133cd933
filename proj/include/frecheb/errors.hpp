#pragma once

#include <stdexcept>
#include <string>

namespace frecheb {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A scalar outside [0,1] (or NaN) was offered where a membership degree is required.
class DomainError : public Error {
public:
    using Error::Error;
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

class IndexOutOfRange : public Error {
public:
    using Error::Error;
};

/// A kind-specific routine received a system built on another implication.
class KindMismatch : public Error {
public:
    using Error::Error;
};

/// A report was paired with a system it was not computed for.
class ReportMismatch : public Error {
public:
    using Error::Error;
};

/// Raised by the bisection oracle when the predicate is observed not to be up-closed.
class PredicateNotUpClosed : public Error {
public:
    using Error::Error;
};

}  // namespace frecheb
