#ifndef A4WITT_ERRORS_HPP
#define A4WITT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace a4witt {

// Base class for all typed errors raised by the library.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Factorization ceiling or Pollard-rho budget exhausted; the caller must
// reduce input height (or raise the configured ceiling).
struct FactorizationExceeded : Error {
    explicit FactorizationExceeded(const std::string& what) : Error(what) {}
};

// Hilbert symbols are undefined at zero arguments.
struct UndefinedSymbol : Error {
    explicit UndefinedSymbol(const std::string& what) : Error(what) {}
};

struct DivisionByZeroPoly : Error {
    explicit DivisionByZeroPoly(const std::string& what) : Error(what) {}
};

struct ParseError : Error {
    // position is a 0-based offset into the offending input string
    ParseError(const std::string& what, std::size_t position)
        : Error(what + " (at position " + std::to_string(position) + ")"),
          pos(position) {}
    std::size_t pos;
};

// The birational (a) <-> (c) map of the resolvent module degenerates at b0 = 0.
struct DegenerateResolvent : Error {
    explicit DegenerateResolvent(const std::string& what) : Error(what) {}
};

// Neither modulus makes the pencil remainder proportional to Q.
struct NoProportionality : Error {
    explicit NoProportionality(const std::string& what) : Error(what) {}
};

// A numeric denominator fell below tolerance; the check is skipped, not failed.
struct NumericDegenerate : Error {
    explicit NumericDegenerate(const std::string& what) : Error(what) {}
};

struct ReducibleInput : Error {
    explicit ReducibleInput(const std::string& what) : Error(what) {}
};

struct SingularInput : Error {
    explicit SingularInput(const std::string& what) : Error(what) {}
};

struct NotSquarefree : Error {
    explicit NotSquarefree(const std::string& what) : Error(what) {}
};

// Gram matrix with zero determinant (disc(P) = 0) cannot be diagonalized.
struct DegenerateForm : Error {
    explicit DegenerateForm(const std::string& what) : Error(what) {}
};

struct NoConventionMatches : Error {
    explicit NoConventionMatches(const std::string& what) : Error(what) {}
};

struct NoSignMatches : Error {
    explicit NoSignMatches(const std::string& what) : Error(what) {}
};

// uv_from_symbols precondition failure; the message names the constraint.
struct DegenerateParams : Error {
    explicit DegenerateParams(const std::string& what) : Error(what) {}
};

}  // namespace a4witt

#endif
