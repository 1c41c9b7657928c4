#pragma once

#include <stdexcept>
#include <string>

namespace dfib {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Integer argument outside the supported range (overflow guard, bad order).
class OutOfRange : public Error {
public:
    using Error::Error;
};

// Evaluation at a removable or essential singularity of a closed form.
class SingularPoint : public Error {
public:
    using Error::Error;
};

// A deformation denominator crossed zero on the evaluation path.
class PoleEncountered : public Error {
public:
    using Error::Error;
};

// Adaptive quadrature could not meet its tolerance within the evaluation cap.
class QuadratureFailure : public Error {
public:
    using Error::Error;
};

// Argument outside a function's mathematical domain (negative radicand, zero divisor).
class DomainError : public Error {
public:
    using Error::Error;
};

// A callback produced a non-finite value.
class EvaluationFailure : public Error {
public:
    using Error::Error;
};

// Paired containers of different lengths.
class LengthMismatch : public Error {
public:
    using Error::Error;
};

}  // namespace dfib
