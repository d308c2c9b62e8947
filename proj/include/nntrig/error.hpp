#pragma once

#include <stdexcept>
#include <string>

namespace nntrig {

/// Broad failure category; the CLI maps each onto its exit status.
enum class ErrorKind {
    input = 1,        // malformed or out-of-contract input
    numeric = 2,      // non-convergence, conditioning, consistency
    verification = 3  // an identity that should hold did not
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

struct InputError : Error {
    explicit InputError(const std::string& w) : Error(ErrorKind::input, w) {}
};

struct DomainError : Error {
    explicit DomainError(const std::string& w) : Error(ErrorKind::input, w) {}
};

struct PreconditionError : Error {
    explicit PreconditionError(const std::string& w) : Error(ErrorKind::input, w) {}
};

/// Zero polynomial handed to an operation that needs a nonzero one.
struct DegenerateInputError : Error {
    explicit DegenerateInputError(const std::string& w) : Error(ErrorKind::input, w) {}
};

/// Leading coefficient vanishes at the declared formal degree.
struct DegreeDropError : Error {
    explicit DegreeDropError(const std::string& w) : Error(ErrorKind::input, w) {}
};

struct MagnitudeError : Error {
    explicit MagnitudeError(const std::string& w) : Error(ErrorKind::numeric, w) {}
};

struct ConsistencyError : Error {
    explicit ConsistencyError(const std::string& w) : Error(ErrorKind::numeric, w) {}
};

struct ConditioningError : Error {
    explicit ConditioningError(const std::string& w) : Error(ErrorKind::numeric, w) {}
};

/// Trigonometric polynomial is not nonnegative (odd-multiplicity zero on the circle).
struct NotNonnegativeError : Error {
    explicit NotNonnegativeError(const std::string& w) : Error(ErrorKind::numeric, w) {}
};

struct VerificationError : Error {
    explicit VerificationError(const std::string& w) : Error(ErrorKind::verification, w) {}
};

}  // namespace nntrig
