#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hfx {

enum class ErrorCode {
  basis,     // E_BASIS
  index,     // E_INDEX
  mismatch,  // E_MISMATCH
  sigma,     // E_SIGMA
  group,     // E_GROUP
  unit,      // E_UNIT
  name,      // E_NAME
  parse,     // E_PARSE
  range,     // E_RANGE
  cell,      // E_CELL
};

constexpr std::string_view error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::basis: return "E_BASIS";
    case ErrorCode::index: return "E_INDEX";
    case ErrorCode::mismatch: return "E_MISMATCH";
    case ErrorCode::sigma: return "E_SIGMA";
    case ErrorCode::group: return "E_GROUP";
    case ErrorCode::unit: return "E_UNIT";
    case ErrorCode::name: return "E_NAME";
    case ErrorCode::parse: return "E_PARSE";
    case ErrorCode::range: return "E_RANGE";
    case ErrorCode::cell: return "E_CELL";
  }
  return "E_UNKNOWN";
}

/// Every failure raised by the engine carries one of the E_* codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}

  [[nodiscard]] ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace hfx
