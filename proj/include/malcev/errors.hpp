#ifndef MALCEV_ERRORS_HPP
#define MALCEV_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace malcev {

/// Base class for all library errors.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct DivisionByZero : Error {
  DivisionByZero() : Error("division by zero") {}
};

struct FieldMismatch : Error {
  FieldMismatch() : Error("operands belong to different fields") {}
};

/// Raised when a field with characteristic 2 or 3 is requested.
struct BadFieldChar : Error {
  explicit BadFieldChar(unsigned long long p)
      : Error("field characteristic " + std::to_string(p) + " not allowed") {}
};

struct FieldNotAllowed : Error {
  explicit FieldNotAllowed(const std::string& msg) : Error(msg) {}
};

struct DimensionMismatch : Error {
  explicit DimensionMismatch(const std::string& msg = "dimension mismatch")
      : Error(msg) {}
};

struct Singular : Error {
  Singular() : Error("matrix is singular") {}
};

struct ModuleAxiomFailed : Error {
  ModuleAxiomFailed() : Error("action does not satisfy the module axiom") {}
};

struct NotASubalgebra : Error {
  NotASubalgebra() : Error("selected basis vectors do not span a subalgebra") {}
};

struct NotIdempotent : Error {
  NotIdempotent() : Error("projection matrix is not idempotent onto the subalgebra") {}
};

struct NotMalcev : Error {
  NotMalcev() : Error("algebra does not satisfy the Malcev identity") {}
};

struct FactorNotMalcev : Error {
  explicit FactorNotMalcev(const std::string& which)
      : Error("factor " + which + " is not a Malcev algebra") {}
};

struct ResourceLimit : Error {
  explicit ResourceLimit(const std::string& msg) : Error(msg) {}
};

struct LambdaInvalid : Error {
  LambdaInvalid() : Error("functional fails the scalar compatibility condition (T6)") {}
};

/// Parse error carrying a 1-based source location.
struct SyntaxError : Error {
  int line;
  int col;
  SyntaxError(int line_, int col_, const std::string& msg)
      : Error("line " + std::to_string(line_) + ", col " + std::to_string(col_) +
              ": " + msg),
        line(line_),
        col(col_) {}
};

struct UnknownBasisName : SyntaxError {
  UnknownBasisName(int line, int col, const std::string& name)
      : SyntaxError(line, col, "unknown basis name '" + name + "'") {}
};

struct DuplicatePair : SyntaxError {
  DuplicatePair(int line, int col, const std::string& pair)
      : SyntaxError(line, col, "pair " + pair + " already defined") {}
};

struct WrongCodomain : SyntaxError {
  WrongCodomain(int line, int col, const std::string& msg)
      : SyntaxError(line, col, msg) {}
};

}  // namespace malcev

#endif
