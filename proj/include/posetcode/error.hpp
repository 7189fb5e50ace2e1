#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace posetcode {

enum class ErrorKind {
    NonPrimeCharacteristic,
    FieldTooLarge,
    InvalidModulus,
    DivisionByZero,
    MixedFields,
    LengthMismatch,
    NotConstantRow,
    DuplicatePoints,
    ParameterOutOfRange,
    BudgetExceeded,
    PoleDeeperThanStart,
    NotInRiemannRochSpace,
    InvalidPoset,
    GoldenMismatch,
    ParseError,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Library-wide exception. Every failure raised by posetcode carries a kind so
/// the CLI can map it to an exit status.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace posetcode
