#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace wpn {

enum class ErrorCode {
    EmptyInput,
    InvalidUtf8,
    IpLiteralHost,
    DegenerateHost,
    NoTokens,
    EmptyBatch,
    UnknownToken,
    InvalidParam,
    DimensionMismatch,
    EmptyString,
    EmptySet,
    IoError,
    EmptyFile,
    UnknownDetectionId,
    StoreWriteFailure,
};

inline const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::EmptyInput: return "EmptyInput";
        case ErrorCode::InvalidUtf8: return "InvalidUtf8";
        case ErrorCode::IpLiteralHost: return "IpLiteralHost";
        case ErrorCode::DegenerateHost: return "DegenerateHost";
        case ErrorCode::NoTokens: return "NoTokens";
        case ErrorCode::EmptyBatch: return "EmptyBatch";
        case ErrorCode::UnknownToken: return "UnknownToken";
        case ErrorCode::InvalidParam: return "InvalidParam";
        case ErrorCode::DimensionMismatch: return "DimensionMismatch";
        case ErrorCode::EmptyString: return "EmptyString";
        case ErrorCode::EmptySet: return "EmptySet";
        case ErrorCode::IoError: return "IoError";
        case ErrorCode::EmptyFile: return "EmptyFile";
        case ErrorCode::UnknownDetectionId: return "UnknownDetectionId";
        case ErrorCode::StoreWriteFailure: return "StoreWriteFailure";
    }
    return "Unknown";
}

/// Library-wide exception type carrying a machine-checkable code.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void raise(ErrorCode code, const std::string& message) {
    throw Error(code, message);
}

} // namespace wpn
