#pragma once

#include <stdexcept>
#include <string>

namespace clima {

/// Raised when a numeric routine is called outside its domain of validity.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A column name that the frame does not carry.
class UnknownColumn : public std::invalid_argument {
 public:
  explicit UnknownColumn(const std::string& column)
      : std::invalid_argument("unknown column: " + column), column_(column) {}
  [[nodiscard]] const std::string& column() const noexcept { return column_; }

 private:
  std::string column_;
};

/// Request parameters that are individually valid but do not fit together.
class BadRequest : public std::invalid_argument {
 public:
  BadRequest(std::string code, const std::string& message)
      : std::invalid_argument(message), code_(std::move(code)) {}
  [[nodiscard]] const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

}  // namespace clima
