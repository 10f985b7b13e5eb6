#pragma once

#include <stdexcept>
#include <string>

namespace mgeg {

// Base class for all library errors so callers can catch in one place.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// A Gamma-function argument hit a nonpositive integer in a position where no
// finite interpretation applies.
struct PoleError : Error {
    explicit PoleError(const std::string& msg) : Error(msg) {}
};

// Parameter outside the supported range (e.g. Gegenbauer parameter 0 or
// <= -1/2, where the weight degenerates or the normalisation breaks down).
struct UnsupportedParameter : Error {
    explicit UnsupportedParameter(const std::string& msg) : Error(msg) {}
};

// Two series/values with different basis parameters were combined.
struct ParameterMismatch : Error {
    explicit ParameterMismatch(const std::string& msg) : Error(msg) {}
};

// An index is outside its documented admissible range.
struct IndexError : Error {
    explicit IndexError(const std::string& msg) : Error(msg) {}
};

// Polynomial interpolation of generating-function slices did not reproduce
// the extra verification nodes (or produced non-integer coefficients).
struct InterpolationMismatch : Error {
    explicit InterpolationMismatch(const std::string& msg) : Error(msg) {}
};

// A closed form failed to match its power-series expansion.
struct SeriesMismatch : Error {
    explicit SeriesMismatch(const std::string& msg) : Error(msg) {}
};

// The simultaneous root iteration did not converge within its iteration cap,
// or the polynomial degree exceeds what double precision supports here.
struct ConvergenceFailure : Error {
    explicit ConvergenceFailure(const std::string& msg) : Error(msg) {}
};

// Root patterns that a comparison (e.g. interlacing) cannot be applied to.
struct DegenerateInput : Error {
    explicit DegenerateInput(const std::string& msg) : Error(msg) {}
};

} // namespace mgeg
