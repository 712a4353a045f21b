#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace hkspread {

enum class ErrorKind {
    invalid_argument,
    ring_mismatch,
    resource_limit,
    exponent_overflow,
    infinite_length,
    not_m_primary,
    containment,
    precondition,
    non_homogeneous,
    division_by_zero,
    parse,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library carries a machine-readable kind so the
/// session runner can report it without string matching.
class Error : public std::runtime_error {
   public:
    Error(ErrorKind kind, const std::string& message) : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

   private:
    ErrorKind kind_;
};

class ParseError : public Error {
   public:
    ParseError(const std::string& message, std::size_t line, std::size_t column)
        : Error(ErrorKind::parse, message), line_(line), column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

   private:
    std::size_t line_;
    std::size_t column_;
};

}  // namespace hkspread
