#ifndef PERMPAT_ERRORS_HPP
#define PERMPAT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace permpat {

// Base class for all errors raised by the library. The CLI maps these to
// exit code 1 and prints name() alongside the message.
class Error : public std::runtime_error {
public:
  Error(std::string name, const std::string& what)
      : std::runtime_error(what), name_(std::move(name)) {}
  const std::string& name() const { return name_; }

private:
  std::string name_;
};

struct ZeroConstantTerm : Error {
  explicit ZeroConstantTerm(const std::string& what)
      : Error("ZeroConstantTerm", what) {}
};

struct NonzeroConstantTerm : Error {
  explicit NonzeroConstantTerm(const std::string& what)
      : Error("NonzeroConstantTerm", what) {}
};

struct NonIntegerResult : Error {
  explicit NonIntegerResult(const std::string& what)
      : Error("NonIntegerResult", what) {}
};

struct SizeLimitExceeded : Error {
  explicit SizeLimitExceeded(const std::string& what)
      : Error("SizeLimitExceeded", what) {}
};

struct PreconditionViolated : Error {
  explicit PreconditionViolated(const std::string& what)
      : Error("PreconditionViolated", what) {}
};

struct EmptyClass : Error {
  explicit EmptyClass(const std::string& what) : Error("EmptyClass", what) {}
};

struct NotRising : Error {
  explicit NotRising(const std::string& what) : Error("NotRising", what) {}
};

struct LengthTooSmall : Error {
  explicit LengthTooSmall(const std::string& what)
      : Error("LengthTooSmall", what) {}
};

struct BracketingFailed : Error {
  explicit BracketingFailed(const std::string& what)
      : Error("BracketingFailed", what) {}
};

}  // namespace permpat

#endif  // PERMPAT_ERRORS_HPP
