#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hf {

/// Base of every domain error raised by the library.  `name()` is the stable
/// identifier the CLI prints on the diagnostic stream.
class Error : public std::runtime_error {
public:
  Error(std::string_view name, const std::string &what)
      : std::runtime_error(what), name_(name) {}

  std::string_view name() const noexcept { return name_; }

private:
  std::string_view name_;
};

#define HF_DEFINE_ERROR(Type)                                                  \
  class Type : public Error {                                                  \
  public:                                                                      \
    explicit Type(const std::string &what) : Error(#Type, what) {}             \
  };

HF_DEFINE_ERROR(InvalidDeformation)
HF_DEFINE_ERROR(UndefinedDenominator)
HF_DEFINE_ERROR(ZeroPolynomial)
HF_DEFINE_ERROR(ParseError)
HF_DEFINE_ERROR(ConfluenceFailure)
HF_DEFINE_ERROR(RelationViolation)
HF_DEFINE_ERROR(OutOfRange)
HF_DEFINE_ERROR(ConditionFailed)
HF_DEFINE_ERROR(VerificationFailure)
HF_DEFINE_ERROR(NotApplicable)
HF_DEFINE_ERROR(IncompatibleWindows)
HF_DEFINE_ERROR(FormulaViolation)

#undef HF_DEFINE_ERROR

} // namespace hf
