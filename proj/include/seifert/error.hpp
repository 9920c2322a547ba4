#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace seifert {

enum class ErrorKind {
    NonNegativeCoefficient,
    ZeroCoefficient,
    InvalidArgument,
    ConditionViolation,
    NonNormal,
    LengthMismatch,
    RangeViolation,
    ParityViolation,
    InfiniteOrder,
    SearchExhausted,
    DegenerateLattice,
    NotNegativeDefinite,
    NoValidD,
};

std::string_view to_string(ErrorKind kind);

/// Rejected input. The CLI maps every Error to exit code 2.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace seifert
