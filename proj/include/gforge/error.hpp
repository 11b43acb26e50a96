#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gforge {

enum class ErrorCode {
    ConstantPolynomial,
    DegreeCapExceeded,
    UnsupportedField,
    FieldMismatch,
    DivisionByZero,
    CoefficientBlowup,
    DuplicateNodes,
    DegreeMismatch,
    NonMonicFiber,
    NotMonic,
    NotSeparable,
    InseparableFamily,
    BadDegree,
    RamifiedPoint,
    WrongBase,
    SplitTrinomialNotFound,
    UnsupportedCharacteristic,
    NotIrreducible,
    NTooSmall,
    SearchBudgetExhausted,
    RingMismatch,
    ZeroInput,
    InvalidAutomorphism,
    NotASubgroup,
    GroupTooLarge,
    NonDivisible,
    InvalidArgument,
    ParseError,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

/// Malformed polynomial, field, or ring text. Positions are 1-based.
class ParseError : public Error {
public:
    ParseError(const std::string& msg, int line, int column)
        : Error(ErrorCode::ParseError,
                msg + " at line " + std::to_string(line) + ", column " + std::to_string(column)),
          line_(line), column_(column) {}

    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }

private:
    int line_;
    int column_;
};

}  // namespace gforge
