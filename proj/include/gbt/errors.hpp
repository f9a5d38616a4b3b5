#pragma once

#include <stdexcept>
#include <string>

namespace gbt {

// Shape/size/index problems in the inputs: wrong dimensions, out-of-range
// sample indices, malformed partitions.
class StructuralError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Inputs that are well-formed but outside the domain of an operation
// (non-Hermitian where Hermitian is required, non-projector effects, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Belief update requested for an event of probability zero.
class UndefinedUpdate : public DomainError {
public:
    using DomainError::DomainError;
};

// Explicit resource caps (e.g. clique enumeration vertex limit).
class ResourceError : public std::length_error {
public:
    using std::length_error::length_error;
};

}  // namespace gbt
