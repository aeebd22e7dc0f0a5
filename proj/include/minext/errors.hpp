#pragma once

#include <stdexcept>
#include <string>

namespace minext {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define MINEXT_DEFINE_ERROR(Name)             \
  class Name : public Error {                 \
   public:                                    \
    explicit Name(const std::string& what)    \
        : Error(std::string(#Name ": ") + what) {} \
  };

MINEXT_DEFINE_ERROR(InvalidArgument)
MINEXT_DEFINE_ERROR(DivisionByZero)
MINEXT_DEFINE_ERROR(NotAUnit)
MINEXT_DEFINE_ERROR(UndefinedValuation)
MINEXT_DEFINE_ERROR(CtxMismatch)
MINEXT_DEFINE_ERROR(NotAQuotient)
MINEXT_DEFINE_ERROR(TooLarge)
MINEXT_DEFINE_ERROR(OutOfFamily)
MINEXT_DEFINE_ERROR(NotMinimal)
MINEXT_DEFINE_ERROR(ParseError)

#undef MINEXT_DEFINE_ERROR

}  // namespace minext
