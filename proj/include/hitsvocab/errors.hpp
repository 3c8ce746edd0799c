#pragma once

#include <stdexcept>
#include <string>

namespace hitsvocab {

// Base class for all toolkit errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// File system / input format failures (exit status 2 in the CLI).
struct IoError : Error {
    using Error::Error;
};

// Malformed input content; messages carry "<path>:<line>:" where known.
struct ParseError : IoError {
    using IoError::IoError;
};

// Violations of operation contracts (exit status 1 in the CLI).
struct DomainError : Error {
    using Error::Error;
};

// Adjacency matrix with no nonzero entries.
struct DegenerateMatrixError : DomainError {
    using DomainError::DomainError;
};

// Zero vector hit during normalization or an invalid start vector.
struct NumericalError : DomainError {
    using DomainError::DomainError;
};

// PMI requested for a cell with a zero count or marginal.
struct UndefinedPmiError : DomainError {
    using DomainError::DomainError;
};

// Vocabulary size too small to hold the reserved tokens.
struct CapacityError : DomainError {
    using DomainError::DomainError;
};

// Inputs that must describe the same corpus do not.
struct ConsistencyError : DomainError {
    using DomainError::DomainError;
};

// Mismatched vector/matrix dimensions.
struct ShapeError : DomainError {
    using DomainError::DomainError;
};

}  // namespace hitsvocab
