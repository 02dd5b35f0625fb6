#pragma once

#include <stdexcept>
#include <string>

namespace pisot {

// Every error carries a category so the CLI can map it onto an exit code:
// validation problems (bad input, unsupported configuration) exit 2,
// numeric failures (precision, convergence, I/O) exit 3.
enum class ErrorCategory { validation, numeric };

class Error : public std::runtime_error {
 public:
  Error(ErrorCategory category, const std::string& what)
      : std::runtime_error(what), category_(category) {}
  ErrorCategory category() const noexcept { return category_; }

 private:
  ErrorCategory category_;
};

class ValidationError : public Error {
 public:
  explicit ValidationError(const std::string& what)
      : Error(ErrorCategory::validation, what) {}
};

class NumericError : public Error {
 public:
  explicit NumericError(const std::string& what)
      : Error(ErrorCategory::numeric, what) {}
};

#define PISOT_DEFINE_ERROR(Name, Base)                       \
  class Name : public Base {                                 \
   public:                                                   \
    explicit Name(const std::string& what) : Base(what) {}   \
  };

PISOT_DEFINE_ERROR(ReducibleError, ValidationError)
PISOT_DEFINE_ERROR(DegenerateError, ValidationError)
PISOT_DEFINE_ERROR(NotPisotError, ValidationError)
PISOT_DEFINE_ERROR(NormalizationError, ValidationError)
PISOT_DEFINE_ERROR(EigenError, ValidationError)
PISOT_DEFINE_ERROR(UnknownExampleError, ValidationError)
PISOT_DEFINE_ERROR(EmptyWindowError, ValidationError)
PISOT_DEFINE_ERROR(WindowTooSmallError, ValidationError)
PISOT_DEFINE_ERROR(SizeError, ValidationError)

PISOT_DEFINE_ERROR(PrecisionError, NumericError)
PISOT_DEFINE_ERROR(NonconvergenceError, NumericError)
PISOT_DEFINE_ERROR(IoError, NumericError)

#undef PISOT_DEFINE_ERROR

}  // namespace pisot
