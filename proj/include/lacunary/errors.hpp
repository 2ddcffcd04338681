#pragma once

#include <stdexcept>
#include <string>

namespace lacunary {

/// Base for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Caller violated an argument contract (order mismatch, bad index, m < 2, ...).
class UsageError : public Error {
public:
    using Error::Error;
};

/// Parameter outside the mathematical domain of the operation.
class DomainError : public Error {
public:
    using Error::Error;
};

/// Reciprocal of a series whose constant term vanishes.
class SingularSeriesError : public Error {
public:
    using Error::Error;
};

/// Series operation that would leave the rational field (exp of a series with
/// nonzero constant term, inverse square root of a non-unit series).
class UnsupportedNormalizationError : public Error {
public:
    using Error::Error;
};

/// Quadrature integrand produced a non-finite value.
class EvaluationError : public Error {
public:
    using Error::Error;
};

} // namespace lacunary
