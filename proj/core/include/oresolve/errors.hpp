#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace oresolve {

// Base class for all errors raised by the library.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// A denominator vanished at an integer evaluation point.
struct EvalPole : Error {
    explicit EvalPole(const std::string& msg) : Error(msg) {}
};

// Exact roots of an irreducible factor of degree >= 3 were demanded.
struct IrreducibleDegreeTooHigh : Error {
    explicit IrreducibleDegreeTooHigh(const std::string& msg) : Error(msg) {}
};

// Truncated Laurent arithmetic left no common epsilon orders.
struct EmptyWindow : Error {
    explicit EmptyWindow(const std::string& msg) : Error(msg) {}
};

// An expression contains sum factors outside the harmonic-type fragment.
struct NotHarmonicReducible : Error {
    explicit NotHarmonicReducible(const std::string& msg) : Error(msg) {}
};

// Row/column elimination emptied the system but the right-hand side survived,
// or the pencil is rank deficient (underdetermined solution set).
struct DegenerateSystem : Error {
    explicit DegenerateSystem(const std::string& msg) : Error(msg) {}
};

// Uncoupling could not cover all unknowns.  Unreachable for systems with an
// invertible matrix; reaching it signals a bug or a degenerate input.
struct PivotFailure : Error {
    explicit PivotFailure(const std::string& msg) : Error(msg) {}
};

// A non-polynomial right-hand-side coefficient was met and no
// coefficient-extraction hook was supplied.
struct NonPolynomialRhs : Error {
    explicit NonPolynomialRhs(const std::string& msg) : Error(msg) {}
};

// Recurrence solving needs values at the listed sequence indices.
struct InsufficientInitialValues : Error {
    std::vector<long> indices;
    InsufficientInitialValues(const std::string& msg, std::vector<long> idx)
        : Error(msg), indices(std::move(idx)) {}
};

// The two tactics produced solutions that disagree at a checked point.
struct MismatchDetected : Error {
    explicit MismatchDetected(const std::string& msg) : Error(msg) {}
};

// Arithmetic attempted to mix two different quadratic extensions.
struct MixedExtension : Error {
    explicit MixedExtension(const std::string& msg) : Error(msg) {}
};

// Textual input could not be parsed.
struct ParseError : Error {
    explicit ParseError(const std::string& msg) : Error(msg) {}
};

}  // namespace oresolve
