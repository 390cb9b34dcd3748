#pragma once

#include <stdexcept>
#include <string>

namespace halg {

/// Base class for mathematically meaningful failures (as opposed to usage bugs).
class MathError : public std::runtime_error {
public:
    explicit MathError(const std::string& what) : std::runtime_error(what) {}
};

/// Raised when an operation needs a root that does not exist in the current
/// cyclotomic field.  Carries a polynomial (as text) that would have to split.
class ExtendFieldError : public MathError {
public:
    ExtendFieldError(const std::string& what, std::string poly)
        : MathError(what + " [needs splitting of: " + poly + "]"), polynomial(std::move(poly)) {}
    std::string polynomial;
};

/// Raised when a bialgebra admits no antipode.
class NoAntipodeError : public MathError {
public:
    explicit NoAntipodeError(const std::string& what) : MathError(what) {}
};

/// Raised when an exact search exceeds its configured combinatorial budget.
class LimitError : public MathError {
public:
    explicit LimitError(const std::string& what) : MathError(what) {}
};

} // namespace halg
