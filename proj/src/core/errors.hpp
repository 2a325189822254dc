#ifndef QBOUND_CORE_ERRORS_HPP
#define QBOUND_CORE_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qbound {

/// Malformed expression text. `position` is the 0-based byte offset of the
/// offending token (or end of input).
class SyntaxError : public std::runtime_error {
public:
    SyntaxError(std::string message, std::size_t position)
        : std::runtime_error(std::move(message)), position_(position) {}
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// Evaluation outside the mathematical domain (ln of a non-positive value,
/// division by zero, even root of a negative radicand, ...).
class DomainError : public std::runtime_error {
public:
    explicit DomainError(std::string message) : std::runtime_error(std::move(message)) {}
};

/// Parameter violates an operation's contract (theta outside [0,1], a >= b, ...).
class InvalidArgument : public std::invalid_argument {
public:
    explicit InvalidArgument(std::string message) : std::invalid_argument(std::move(message)) {}
};

/// q outside the range a bound supports (the Hoelder bound needs q > 1).
class UnsupportedExponent : public InvalidArgument {
public:
    explicit UnsupportedExponent(std::string message) : InvalidArgument(std::move(message)) {}
};

/// Adaptive refinement hit its depth limit before reaching the tolerance.
class NoConvergence : public std::runtime_error {
public:
    explicit NoConvergence(std::string message) : std::runtime_error(std::move(message)) {}
};

/// A required quasi-convexity precondition failed its sampling check.
class NotQuasiConvex : public std::runtime_error {
public:
    NotQuasiConvex(std::string message, double max_violation)
        : std::runtime_error(std::move(message)), max_violation_(max_violation) {}
    double max_violation() const noexcept { return max_violation_; }

private:
    double max_violation_;
};

} // namespace qbound

#endif
