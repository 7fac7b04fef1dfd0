#pragma once

#include <stdexcept>
#include <string>

namespace minann {

// Base class for everything this library throws on purpose.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Invalid call arguments (counts, tolerances, flags).
class ParameterError : public Error {
public:
    using Error::Error;
};

// A point or value outside the mathematical domain of an operation.
class DomainError : public Error {
public:
    using Error::Error;
};

// Grid too coarse, or a series truncation that cannot represent the data.
class ResolutionError : public Error {
public:
    using Error::Error;
};

// Numerically meaningless geometry (vanishing tangents, normals, ...).
class DegeneracyError : public Error {
public:
    using Error::Error;
};

// Weierstrass data that violates its own conditions (g_z = 0, bad periods).
class DataError : public Error {
public:
    using Error::Error;
};

// Least-squares fit with a rank-deficient system.
class FitError : public Error {
public:
    using Error::Error;
};

// The boundary-frame normalization cannot be reached by the supported rotations.
class NormalizationError : public Error {
public:
    using Error::Error;
};

// Samples that are not consistent with a single-valued analytic function.
class AnalyticityError : public Error {
public:
    using Error::Error;
};

// A recovered quantity that fails an exactness requirement (e.g. integrality).
class InconsistencyError : public Error {
public:
    using Error::Error;
};

// File system / parse / schema problems. CLI maps these to exit code 2.
class IoError : public Error {
public:
    using Error::Error;
};

} // namespace minann
