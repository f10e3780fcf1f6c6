#pragma once

#include <stdexcept>
#include <string>

namespace sqeeg {

/// Base of every error raised by the library. The CLI maps ConfigError to
/// exit code 2 and everything else to exit code 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define SQEEG_DEFINE_ERROR(Name)          \
  class Name : public Error {             \
   public:                                \
    using Error::Error;                   \
  };

SQEEG_DEFINE_ERROR(ParseError)
SQEEG_DEFINE_ERROR(ConfigError)
SQEEG_DEFINE_ERROR(UnsupportedFormat)
SQEEG_DEFINE_ERROR(DomainError)
SQEEG_DEFINE_ERROR(AlignmentError)
SQEEG_DEFINE_ERROR(UnsupportedRate)
SQEEG_DEFINE_ERROR(SignalTooShort)
SQEEG_DEFINE_ERROR(InsufficientChannels)
SQEEG_DEFINE_ERROR(InsufficientData)
SQEEG_DEFINE_ERROR(EmptyRoi)
SQEEG_DEFINE_ERROR(InsufficientCoverage)
SQEEG_DEFINE_ERROR(EmptySelection)

#undef SQEEG_DEFINE_ERROR

}  // namespace sqeeg
