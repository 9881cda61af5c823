#ifndef UNITRI_ERROR_HPP
#define UNITRI_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace unitri {

/// Failure categories raised by the library. Each maps to one message family.
enum class Errc {
  ambient_mismatch,
  index_out_of_range,
  invalid_derivation,
  invalid_automorphism,
  nilpotency_cap_exceeded,
  outside_filtration_level,
  filtration_not_preserved,
  precondition,
  derived_series_inclusion,
  lambda_not_scalar,
  zero_leading_scalar,
  integrability_failure,
  not_realizable,
  solver_consistency,
  parse,
};

const char* errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

/// Syntax error with a 1-based source position.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : Error(Errc::parse, std::to_string(line) + ":" + std::to_string(column) + ": " + message),
        message_(message),
        line_(line),
        column_(column) {}

  const std::string& message() const noexcept { return message_; }
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::string message_;
  std::size_t line_;
  std::size_t column_;
};

}  // namespace unitri

#endif  // UNITRI_ERROR_HPP
