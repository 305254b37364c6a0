#pragma once

#include <stdexcept>
#include <string>

namespace heatbie {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A numeric argument violates a documented precondition.
class InvalidParameter : public Error {
public:
    using Error::Error;
};

/// Two fields (or a field and an operator) live on different discretizations.
class GridMismatch : public Error {
public:
    using Error::Error;
};

class DegenerateTangent : public Error {
public:
    using Error::Error;
};

/// Evaluation point is outside the domain bounded by the curve.
class OutsideDomain : public Error {
public:
    using Error::Error;
};

/// Point source placed inside the domain or closer than the required margin.
class SourceInsideDomain : public Error {
public:
    using Error::Error;
};

class ZeroReference : public Error {
public:
    using Error::Error;
};

/// Malformed or inconsistent experiment configuration.
class ConfigError : public Error {
public:
    using Error::Error;
};

class IoError : public Error {
public:
    using Error::Error;
};

}  // namespace heatbie
