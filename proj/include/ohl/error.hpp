#pragma once

#include <stdexcept>
#include <string>

namespace ohl {

enum class Errc {
  CodMismatch,
  FeetMismatch,
  FamMismatch,
  ShapeMismatch,
  ComponentShapeError,
  TriangleViolation,
  FactorizationViolation,
  BoundaryMismatch,
  NotMonic,
  UnsupportedBackend,
  NotFirm,
  NotBimodule,
  NotAGroupoid,
  NotOverX2,
  OutOfBounds,
  ParseError,
  SchemaError,
};

const char* errc_name(Errc e) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace ohl
