#ifndef PADELAB_ERRORS_HPP
#define PADELAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace padelab {

/// Root of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A coefficient past the truncation length of a series was requested.
class TruncationError : public Error {
public:
    using Error::Error;
};

/// An operation was called with inputs outside its contract.
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// An exact identity that must hold by construction did not.
class VerificationError : public Error {
public:
    using Error::Error;
};

/// The approximation oracle hit its degree cap before meeting its tolerance.
class EscalationError : public Error {
public:
    using Error::Error;
};

/// A derived perturbation coefficient vanished; the caller may retry with other inputs.
class RetryableError : public Error {
public:
    using Error::Error;
};

/// Malformed text, document or configuration.
class ParseError : public Error {
public:
    using Error::Error;
};

}  // namespace padelab

#endif
