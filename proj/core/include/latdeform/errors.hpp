#ifndef LATDEFORM_ERRORS_HPP
#define LATDEFORM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace latdeform {

// Process exit codes. The CLI maps library exceptions onto these, so the
// values are part of the public contract.
enum ExitCode {
  kExitOk = 0,
  kExitError = 1,
  kExitSchema = 2,
  kExitNotStronglyConnected = 3,
  kExitNotFiniteIndex = 4,
  kExitNonGenericResult = 5,
};

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg, int exit_code = kExitError)
      : std::runtime_error(msg), exit_code_(exit_code) {}
  int exit_code() const { return exit_code_; }

 private:
  int exit_code_;
};

struct SchemaError : Error {
  explicit SchemaError(const std::string& msg) : Error(msg, kExitSchema) {}
};

struct NotStronglyConnected : Error {
  explicit NotStronglyConnected(const std::string& msg)
      : Error(msg, kExitNotStronglyConnected) {}
};

struct NotFiniteIndex : Error {
  explicit NotFiniteIndex(const std::string& msg)
      : Error(msg, kExitNotFiniteIndex) {}
};

struct NonGenericResult : Error {
  explicit NonGenericResult(const std::string& msg)
      : Error(msg, kExitNonGenericResult) {}
};

}  // namespace latdeform

#endif
