#ifndef ORTHOIEQ_ERRORS_HPP
#define ORTHOIEQ_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace orthoieq {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Bad input or configuration (CLI exit code 2).
class ConfigError : public Error {
public:
    using Error::Error;
};

class ParseError : public ConfigError {
public:
    ParseError(const std::string& what, std::size_t position)
        : ConfigError(what + " at offset " + std::to_string(position)), position_(position) {}

    /// 1-based character column of the offending token.
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

class UnknownIdentifierError : public ParseError {
public:
    using ParseError::ParseError;
};

// Attempted Float -> Exact conversion, or an exact computation on data that
// only exists in floating point.
class ModeError : public ConfigError {
public:
    using ConfigError::ConfigError;
};

// Numeric failures (CLI exit code 3).
class NumericError : public Error {
public:
    using Error::Error;
};

class IntegrabilityError : public NumericError {
public:
    using NumericError::NumericError;
};

class NormalizationError : public NumericError {
public:
    using NumericError::NumericError;
};

class QuadratureError : public NumericError {
public:
    QuadratureError(const std::string& what, std::size_t worst_index)
        : NumericError(what), worst_index_(worst_index) {}

    std::size_t worst_index() const noexcept { return worst_index_; }

private:
    std::size_t worst_index_;
};

class InsufficientMomentsError : public NumericError {
public:
    using NumericError::NumericError;
};

class SingularSystemError : public NumericError {
public:
    using NumericError::NumericError;
};

class SingularHankelError : public SingularSystemError {
public:
    using SingularSystemError::SingularSystemError;
};

class DegenerateDegreeError : public NumericError {
public:
    using NumericError::NumericError;
};

class InconsistentPatternError : public NumericError {
public:
    using NumericError::NumericError;
};

class ConstantFunctionError : public NumericError {
public:
    using NumericError::NumericError;
};

class DegreeMismatchError : public NumericError {
public:
    using NumericError::NumericError;
};

class NotProportionalError : public NumericError {
public:
    NotProportionalError(const std::string& what, std::size_t index)
        : NumericError(what), index_(index) {}

    std::size_t index() const noexcept { return index_; }

private:
    std::size_t index_;
};

}  // namespace orthoieq

#endif  // ORTHOIEQ_ERRORS_HPP
