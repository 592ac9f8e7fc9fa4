#pragma once

#include <stdexcept>
#include <string>

namespace eigencycle {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DimensionError : Error {
    using Error::Error;
};

struct NoInteriorEquilibrium : Error {
    using Error::Error;
};

struct NumericalError : Error {
    using Error::Error;
};

struct ResidualTooLarge : Error {
    double residual;
    explicit ResidualTooLarge(const std::string& msg, double r)
        : Error(msg + " (residual=" + std::to_string(r) + ")"), residual(r) {}
};

struct InsufficientData : Error {
    using Error::Error;
};

struct StiffnessError : Error {
    using Error::Error;
};

struct SymmetryError : Error {
    using Error::Error;
};

struct SingularDesign : Error {
    using Error::Error;
};

struct DegenerateInput : Error {
    using Error::Error;
};

struct FixtureError : Error {
    using Error::Error;
};

}  // namespace eigencycle
