#include "thspec/error.hpp"

namespace thspec {

const char *error_code_name(ErrorCode code) noexcept {
  switch (code) {
  case ErrorCode::InvalidArgument:
    return "InvalidArgument";
  case ErrorCode::PoleInDomain:
    return "PoleInDomain";
  case ErrorCode::NegativeRadicand:
    return "NegativeRadicand";
  case ErrorCode::C3Zero:
    return "C3Zero";
  case ErrorCode::InvalidExponent:
    return "InvalidExponent";
  case ErrorCode::OutsideWindow:
    return "OutsideWindow";
  case ErrorCode::NoBoundState:
    return "NoBoundState";
  case ErrorCode::NotIntegrable:
    return "NotIntegrable";
  case ErrorCode::DegenerateDenominator:
    return "DegenerateDenominator";
  case ErrorCode::NoRoot:
    return "NoRoot";
  case ErrorCode::GridTooCoarse:
    return "GridTooCoarse";
  case ErrorCode::Io:
    return "Io";
  }
  return "Unknown";
}

void fail(ErrorCode code, const std::string &what) { throw Error(code, what); }

} // namespace thspec
