#pragma once

#include <stdexcept>
#include <string>

namespace fbeta {

/* Every failure mode surfaces as one of these; nothing in the library calls
 * abort() or returns half-built values. */

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Invalid instance data: broken table property, violated preset side
// condition, unknown parameter, exponent outside the declared bound.
struct ConfigError : Error {
  using Error::Error;
};

// Text that does not match the documented grammar. Positions are 1-based.
struct ParseError : Error {
  ParseError(const std::string& what, int line_, int col_)
      : Error(what + " (line " + std::to_string(line_) + ", column " +
              std::to_string(col_) + ")"),
        line(line_), col(col_) {}
  int line = 1;
  int col = 1;
};

// Division by an element equal to zero.
struct DivisionByZero : Error {
  DivisionByZero() : Error("division by zero") {}
  explicit DivisionByZero(const std::string& what) : Error(what) {}
};

// Quantum integers at a unit c with c - c^-1 = 0.
struct DegenerateQuantumParameter : Error {
  using Error::Error;
};

struct InvalidArgument : Error {
  using Error::Error;
};

// Request above the configured height/size budget.
struct ResourceLimit : Error {
  using Error::Error;
};

}  // namespace fbeta
