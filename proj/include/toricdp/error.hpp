#pragma once

#include <stdexcept>
#include <string>

namespace toricdp {

enum class ErrorKind {
  Overflow,
  InvalidArgument,
  NotUnimodular,
  InvalidFan,
  ClosureFailure,
  NotAmple,
  TooLarge,
  Parse,
  Internal,
};

const char* to_string(ErrorKind kind) noexcept;

// Every failure raised by the library carries a kind so the C layer can map
// it onto a status code without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace toricdp
