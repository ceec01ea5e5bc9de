#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace latin {

enum class ErrorCode {
  invalid_parameter,
  unsupported_source,
  ambiguous_seed,
  not_invariant,
  undefined_sin,
  non_simple_dual,
  too_large,
  not_an_action,
  not_uniform,
  size_mismatch,
  invalid_labeling,
  unsupported,
  invalid_partial,
  invalid_design,
  not_found,
  construction_bug,
  load_error,
  no_layout,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above so
/// that callers (and the CLI's exit-code mapping) can branch on it.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace latin
