#pragma once

#include <stdexcept>
#include <string>

namespace padicmf {

enum class ErrorCode {
    NotPIntegral,
    NotRootOfUnity,
    NotUnit,
    PrecisionExhausted,
    UnsupportedShape,
    EulerFactorNotInvertible,
    BaseMismatch,
    IncompatibleRoots,
    InvalidArgument,
};

constexpr const char* to_string(ErrorCode code) noexcept
{
    switch (code) {
    case ErrorCode::NotPIntegral: return "NotPIntegral";
    case ErrorCode::NotRootOfUnity: return "NotRootOfUnity";
    case ErrorCode::NotUnit: return "NotUnit";
    case ErrorCode::PrecisionExhausted: return "PrecisionExhausted";
    case ErrorCode::UnsupportedShape: return "UnsupportedShape";
    case ErrorCode::EulerFactorNotInvertible: return "EulerFactorNotInvertible";
    case ErrorCode::BaseMismatch: return "BaseMismatch";
    case ErrorCode::IncompatibleRoots: return "IncompatibleRoots";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

/// Every domain failure in the library is reported through this type.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code)
    {
    }

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message)
{
    throw Error(code, message);
}

} // namespace padicmf
