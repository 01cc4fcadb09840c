#pragma once

#include <stdexcept>
#include <string>

namespace hecke {

enum class ErrorCode {
  DatumMismatch,
  NotIntegral,
  NotDominant,
  NotInvariant,
  EmptyParahoric,
  Unsupported,
  Oversize,
  ParityViolation,
  Infeasible,
  BadRank,
  ShapeError,
  InputError,
};

const char* code_name(ErrorCode c);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(code_name(code)) + ": " + what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace hecke
