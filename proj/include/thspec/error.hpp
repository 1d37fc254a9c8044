#pragma once

#include <stdexcept>
#include <string>

namespace thspec {

// Failure categories shared by every module and mirrored by the C status codes.
enum class ErrorCode {
  InvalidArgument = 1,
  PoleInDomain,
  NegativeRadicand,
  C3Zero,
  InvalidExponent,
  OutsideWindow,
  NoBoundState,
  NotIntegrable,
  DegenerateDenominator,
  NoRoot,
  GridTooCoarse,
  Io,
};

const char *error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string &what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string &what);

} // namespace thspec
