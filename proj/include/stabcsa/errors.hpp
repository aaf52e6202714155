#pragma once

#include <stdexcept>
#include <string>

namespace stabcsa {

struct DivisionByZero : std::runtime_error {
    explicit DivisionByZero(const std::string& what) : std::runtime_error(what) {}
};

struct NonInvertible : std::runtime_error {
    explicit NonInvertible(const std::string& what) : std::runtime_error(what) {}
};

// The specialization map is undefined at the sampled point; caller must resample.
struct DenominatorVanishes : std::runtime_error {
    explicit DenominatorVanishes(const std::string& what) : std::runtime_error(what) {}
};

struct MissingRoot : std::runtime_error {
    explicit MissingRoot(const std::string& what) : std::runtime_error(what) {}
};

struct MissingAssignment : std::runtime_error {
    explicit MissingAssignment(const std::string& what) : std::runtime_error(what) {}
};

struct DimensionMismatch : std::invalid_argument {
    explicit DimensionMismatch(const std::string& what) : std::invalid_argument(what) {}
};

struct InvalidCase : std::invalid_argument {
    explicit InvalidCase(const std::string& what) : std::invalid_argument(what) {}
};

struct NotDiagonalizable : std::runtime_error {
    explicit NotDiagonalizable(const std::string& what) : std::runtime_error(what) {}
};

// Signals a convention error: a pairing that should diagonalize did not.
struct CrossTermsPresent : std::runtime_error {
    explicit CrossTermsPresent(const std::string& what) : std::runtime_error(what) {}
};

struct CertificateFailure : std::runtime_error {
    explicit CertificateFailure(const std::string& what) : std::runtime_error(what) {}
};

struct ParseError : std::runtime_error {
    int line;
    int column;
    ParseError(const std::string& what, int line_, int col_)
        : std::runtime_error(what + " (line " + std::to_string(line_) + ", column " +
                             std::to_string(col_) + ")"),
          line(line_), column(col_) {}
};

struct InputError : std::runtime_error {
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace stabcsa
