#pragma once

#include <stdexcept>
#include <string>

namespace geogen {

// Invalid arguments, broken invariants, malformed configuration.
struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A rejection-sampled quantity exhausted its retry budget.
struct SamplingError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Numerical failure (e.g. covariance factorization) after regularization.
struct NumericError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Filesystem / serialization failures.
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed on-disk data (bad magic, bad header, shape mismatch).
struct FormatError : IoError {
    using IoError::IoError;
};

}  // namespace geogen
