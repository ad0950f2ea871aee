#pragma once

#include <stdexcept>
#include <string>

namespace onf {

// Base of all artifact errors. Subtrees map onto CLI exit codes:
// ValidationError -> 1, NumericalError -> 2, IoError -> 3.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ValidationError : Error {
    using Error::Error;
};
struct NumericalError : Error {
    using Error::Error;
};
struct IoError : Error {
    using Error::Error;
};

// --- validation family ---
struct ConfigError : ValidationError {
    using ValidationError::ValidationError;
};
struct UnitError : ConfigError {
    using ConfigError::ConfigError;
};
struct DomainError : ValidationError {
    using ValidationError::ValidationError;
};
struct WindowError : ValidationError {
    using ValidationError::ValidationError;
};
struct SegmentError : ValidationError {
    using ValidationError::ValidationError;
};
struct StepSizeError : ValidationError {
    using ValidationError::ValidationError;
};

// --- numerical family ---
struct ResonanceSingularityError : NumericalError {
    using NumericalError::NumericalError;
};
struct DispersiveRegimeError : NumericalError {
    using NumericalError::NumericalError;
};
struct MultimodeError : NumericalError {
    using NumericalError::NumericalError;
};
struct NoGuidedModeError : NumericalError {
    using NumericalError::NumericalError;
};
struct ResolutionError : NumericalError {
    using NumericalError::NumericalError;
};
struct NoTrapError : NumericalError {
    using NumericalError::NumericalError;
};
struct SaddleError : NumericalError {
    using NumericalError::NumericalError;
};
struct FitFailureError : NumericalError {
    using NumericalError::NumericalError;
};
struct DegenerateWidthError : NumericalError {
    using NumericalError::NumericalError;
};
struct NoDecayError : NumericalError {
    using NumericalError::NumericalError;
};

}  // namespace onf
