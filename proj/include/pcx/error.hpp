#pragma once

#include <stdexcept>
#include <string>

namespace pcx {

enum class ErrorCode {
  NotFiniteDimensional,
  NotAComplex,
  GldimBoundExceeded,
  NoHomotopy,
  NotHereditary,
  CycleInvalid,
  ZeroExt,
  ShapeMismatch,
  Parse,
  Semantic,
};

inline const char* to_string(ErrorCode c) {
  switch (c) {
    case ErrorCode::NotFiniteDimensional: return "NOT_FINITE_DIMENSIONAL";
    case ErrorCode::NotAComplex: return "NOT_A_COMPLEX";
    case ErrorCode::GldimBoundExceeded: return "GLDIM_BOUND_EXCEEDED";
    case ErrorCode::NoHomotopy: return "NO_HOMOTOPY";
    case ErrorCode::NotHereditary: return "NOT_HEREDITARY";
    case ErrorCode::CycleInvalid: return "CYCLE_INVALID";
    case ErrorCode::ZeroExt: return "ZERO_EXT";
    case ErrorCode::ShapeMismatch: return "SHAPE_MISMATCH";
    case ErrorCode::Parse: return "PARSE_ERROR";
    case ErrorCode::Semantic: return "SEMANTIC_ERROR";
  }
  return "UNKNOWN_ERROR";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace pcx
