#ifndef SURFGW_ERRORS_HPP
#define SURFGW_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace surfgw {

// Base for all contract violations raised by the library.
struct SeriesError : std::runtime_error {
    explicit SeriesError(const std::string& msg) : std::runtime_error(msg) {}
};

// Leading coefficient is not a unit, so no series inverse exists.
struct NotInvertible : SeriesError {
    explicit NotInvertible(const std::string& msg) : SeriesError(msg) {}
};

// A coefficient at or beyond the recorded precision was requested.
// Coefficients there are unknown, never silently zero.
struct InsufficientPrecision : SeriesError {
    explicit InsufficientPrecision(const std::string& msg) : SeriesError(msg) {}
};

// exp() requires strictly positive valuation in the outer variable.
struct PositiveValuationRequired : SeriesError {
    explicit PositiveValuationRequired(const std::string& msg) : SeriesError(msg) {}
};

// The q^0 term of the defining ODE right-hand side failed to vanish.
// Signals an implementation bug, not a user error.
struct InconsistentODE : SeriesError {
    explicit InconsistentODE(const std::string& msg) : SeriesError(msg) {}
};

// A multiple cover summand survived the effectiveness filter but carries
// a fractional exponent; refusing to pick a branch of k^x.
struct NonIntegralExponent : SeriesError {
    explicit NonIntegralExponent(const std::string& msg) : SeriesError(msg) {}
};

// A DR-vertex prefactor a^deg would need a fractional power.
struct NonIntegralPrefactor : SeriesError {
    explicit NonIntegralPrefactor(const std::string& msg) : SeriesError(msg) {}
};

// A primitive value needed by a multiple cover transform was not supplied.
struct MissingPrimitiveValue : SeriesError {
    explicit MissingPrimitiveValue(const std::string& msg) : SeriesError(msg) {}
};

// Input windows of a PT series transform do not overlap enough to
// produce any output coefficient.
struct WindowMismatch : SeriesError {
    explicit WindowMismatch(const std::string& msg) : SeriesError(msg) {}
};

// Command-line / input-format problems.
struct ParseError : SeriesError {
    explicit ParseError(const std::string& msg) : SeriesError(msg) {}
};

} // namespace surfgw

#endif
