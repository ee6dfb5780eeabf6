#pragma once

#include <stdexcept>
#include <string>

namespace skewtab {

// Error taxonomy, mapped to CLI exit codes:
//   validation  -> 1, verification/calibration -> 2, resource -> 3.
class Error : public std::runtime_error {
public:
    enum class Kind { Validation, Verification, Calibration, Resource, Internal };

    Error(Kind kind, const std::string& msg) : std::runtime_error(msg), kind_(kind) {}
    Kind kind() const { return kind_; }

private:
    Kind kind_;
};

class ValidationError : public Error {
public:
    explicit ValidationError(const std::string& msg) : Error(Kind::Validation, msg) {}
};

// A derived formula failed its brute-force verification sweep.
class VerificationError : public Error {
public:
    explicit VerificationError(const std::string& msg) : Error(Kind::Verification, msg) {}
};

// Prefix-class calibration produced different classes at different sizes.
class CalibrationError : public Error {
public:
    explicit CalibrationError(const std::string& msg) : Error(Kind::Calibration, msg) {}
};

class ResourceLimitError : public Error {
public:
    explicit ResourceLimitError(const std::string& msg) : Error(Kind::Resource, msg) {}
};

class InternalError : public Error {
public:
    explicit InternalError(const std::string& msg) : Error(Kind::Internal, msg) {}
};

// Exact linear fit: sample equations admit no exact solution.
class FitInconsistentError : public VerificationError {
public:
    explicit FitInconsistentError(const std::string& msg) : VerificationError(msg) {}
};

// Exact linear fit: not enough independent equations to pin the coefficients.
class FitUnderdeterminedError : public ValidationError {
public:
    explicit FitUnderdeterminedError(const std::string& msg) : ValidationError(msg) {}
};

}  // namespace skewtab
