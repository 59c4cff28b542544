#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fractalts {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class FileNotFound : public Error {
public:
    using Error::Error;
};

/// CSV cell failed to parse. `row` is the 1-based data row (0 = header),
/// `column` the resolved column name.
class ParseError : public Error {
public:
    ParseError(std::size_t row, std::string column, const std::string& what)
        : Error(what), row(row), column(std::move(column)) {}
    std::size_t row;
    std::string column;
};

class NonMonotonicDates : public Error {
public:
    using Error::Error;
};

class MissingLabels : public Error {
public:
    using Error::Error;
};

class NoOverlap : public Error {
public:
    using Error::Error;
};

class TooShort : public Error {
public:
    using Error::Error;
};

class TauTooLarge : public Error {
public:
    using Error::Error;
};

class DegenerateFit : public Error {
public:
    using Error::Error;
};

class ConfigInvalid : public Error {
public:
    using Error::Error;
};

/// A segment fluctuated below machine precision while the q grid contains
/// q <= 0, for which the generalized mean is undefined.
class ZeroVarianceSegment : public Error {
public:
    ZeroVarianceSegment(int tau, std::size_t segment_index, const std::string& what)
        : Error(what), tau(tau), segment_index(segment_index) {}
    int tau;
    std::size_t segment_index;
};

class InsufficientPoints : public Error {
public:
    using Error::Error;
};

class NonFiniteLog : public Error {
public:
    using Error::Error;
};

class LengthMismatch : public Error {
public:
    using Error::Error;
};

class ZeroVariance : public Error {
public:
    ZeroVariance(int lag, const std::string& what) : Error(what), lag(lag) {}
    int lag;
};

class LagTooLarge : public Error {
public:
    using Error::Error;
};

class EmbeddingFailure : public Error {
public:
    using Error::Error;
};

/// Precondition violation not covered by a more specific error.
class InvalidArgument : public Error {
public:
    using Error::Error;
};

}  // namespace fractalts
