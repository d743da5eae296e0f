#pragma once

#include <stdexcept>
#include <string>

namespace meroquot {

// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// series_inv on a series whose constant coefficient is not the unit polynomial.
struct NonUnitConstantTerm : Error {
    using Error::Error;
};

// Valuation (or inverse) of the zero rational function.
struct ZeroFunction : Error {
    using Error::Error;
};

// Betti index outside [0, 2n].
struct IndexOutOfRange : Error {
    using Error::Error;
};

// Zeta numerator violates the required normalization.
struct InvalidZeta : Error {
    using Error::Error;
};

// Matrix with vanishing determinant where an invertible one is required.
struct SingularMatrix : Error {
    using Error::Error;
};

// Incompatible ranks (matrix shape vs. twist length, or between two maps).
struct RankMismatch : Error {
    using Error::Error;
};

// Lattices that do not span the same rational vector space.
struct DimensionMismatch : Error {
    using Error::Error;
};

// Parse failure; line and column are 1-based.
struct SyntaxError : Error {
    int line;
    int column;
    SyntaxError(const std::string& what, int line_, int col_)
        : Error(what + " at line " + std::to_string(line_) + ", column " + std::to_string(col_)),
          line(line_),
          column(col_) {}
};

}  // namespace meroquot
