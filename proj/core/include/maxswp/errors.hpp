#ifndef MAXSWP_ERRORS_HPP
#define MAXSWP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace maxswp {

/// An argument violates an operation's documented precondition.
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Input is valid but too large for an exact exponential-time routine.
class SizeLimitError : public std::length_error {
public:
    using std::length_error::length_error;
};

/// Malformed text input (edge lists, instance files, partition files).
class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace maxswp

#endif  // MAXSWP_ERRORS_HPP
