#ifndef CHRANK_ERRORS_HPP
#define CHRANK_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace chrank {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DimensionMismatch : Error {
    using Error::Error;
};

struct UnknownGenerator : Error {
    using Error::Error;
};

// Presentation violates admission rules (order-increasing relation,
// scaled relation with nonzero right-hand side, inconsistent torsion, ...).
struct NonAdmissiblePresentation : Error {
    using Error::Error;
};

// Rewriting is not confluent; `witness` is a monomial with two distinct
// normal forms.
struct NonConfluent : Error {
    std::string witness;
    NonConfluent(const std::string& msg, std::string w)
        : Error(msg), witness(std::move(w)) {}
};

struct DegreeError : Error {
    using Error::Error;
};

struct ParseError : Error {
    int line = 0;
    int col = 0;
    ParseError(const std::string& msg, int line_, int col_)
        : Error(msg), line(line_), col(col_) {}
};

struct PreconditionNotMet : Error {
    using Error::Error;
};

struct InconsistentBounds : Error {
    using Error::Error;
};

struct UnsupportedParams : Error {
    using Error::Error;
};

} // namespace chrank

#endif
