#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace solvcohom {

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed text or instance file. `where` is a character offset or a JSON
/// pointer, whichever the caller had.
class ParseError : public Error {
public:
  ParseError(std::string where, const std::string& what)
      : Error(where.empty() ? what : where + ": " + what), where_(std::move(where)) {}
  const std::string& where() const noexcept { return where_; }

private:
  std::string where_;
};

/// Input data that parses but violates a mathematical invariant.
class ValidationError : public Error {
public:
  using Error::Error;
};

/// Characteristic polynomial has an irreducible factor of degree > 1 over Q(i).
class ExtendScalarsError : public ValidationError {
public:
  ExtendScalarsError(const std::string& factor)
      : ValidationError("extend-scalars: characteristic polynomial has factor " + factor +
                        " with no root in Q(i)"),
        factor_(factor) {}
  const std::string& factor() const noexcept { return factor_; }

private:
  std::string factor_;
};

/// d_{p+1} d_p != 0, or shapes that do not compose.
class ComplexError : public Error {
public:
  ComplexError(std::size_t degree, const std::string& what)
      : Error("degree " + std::to_string(degree) + ": " + what), degree_(degree) {}
  std::size_t degree() const noexcept { return degree_; }

private:
  std::size_t degree_;
};

/// Operation called for the wrong ground mode (real-complexified vs complex).
class ModeError : public Error {
public:
  using Error::Error;
};

}  // namespace solvcohom
