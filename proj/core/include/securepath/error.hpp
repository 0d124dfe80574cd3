#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace securepath {

enum class ErrorCode {
    InvalidArgument,
    DegenerateInput,
    InvalidHint,
    HiddenSite,
    NotAdjacent,
    NotTangent,
    NoPath,
    TooLarge,
    ParseError,
    TooFewPoints,
    TooFewInterior,
    IoError,
    Internal,
};

std::string_view toString(ErrorCode code) noexcept;

/// Every failure the library reports is an Error carrying one of the codes above.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(toString(code)) + ": " + what), code_(code)
    {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

} // namespace securepath
