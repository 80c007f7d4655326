#pragma once

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace cousin {

// Error taxonomy shared by the whole toolkit.  The numeric values double as
// process exit codes for the command-line driver:
//   2 = configuration problem (bad flags, unknown preset, malformed input),
//   3 = violated operation precondition (e.g. a weight outside the required
//       dominance chamber),
//   4 = an enumeration or size guard was exceeded.
enum class ErrorKind : int {
  config = 2,
  precondition = 3,
  resource = 4,
};

inline const char* error_kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::config: return "config";
    case ErrorKind::precondition: return "precondition";
    case ErrorKind::resource: return "resource";
  }
  return "unknown";
}

// Structured error: every failure carries the module and operation that
// raised it plus a human-readable message.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string module, std::string operation,
        std::string message)
      : std::runtime_error("[" + module + "/" + operation + "] (" +
                           error_kind_name(kind) + ") " + message),
        kind_(kind),
        module_(std::move(module)),
        operation_(std::move(operation)),
        message_(std::move(message)) {}

  ErrorKind kind() const { return kind_; }
  int exit_code() const { return static_cast<int>(kind_); }
  const std::string& module_name() const { return module_; }
  const std::string& operation_name() const { return operation_; }
  const std::string& message_text() const { return message_; }

 private:
  ErrorKind kind_;
  std::string module_;
  std::string operation_;
  std::string message_;
};

[[noreturn]] inline void fail_config(const std::string& module,
                                     const std::string& op,
                                     const std::string& msg) {
  throw Error(ErrorKind::config, module, op, msg);
}

[[noreturn]] inline void fail_precondition(const std::string& module,
                                           const std::string& op,
                                           const std::string& msg) {
  throw Error(ErrorKind::precondition, module, op, msg);
}

[[noreturn]] inline void fail_resource(const std::string& module,
                                       const std::string& op,
                                       const std::string& msg) {
  throw Error(ErrorKind::resource, module, op, msg);
}

// Enumeration guards can be overridden globally through the COUSIN_MAX_ENUM
// environment variable (a positive integer applied to every bound).
inline long long enumeration_bound(long long default_bound) {
  const char* env = std::getenv("COUSIN_MAX_ENUM");
  if (env == nullptr || *env == '\0') return default_bound;
  char* end = nullptr;
  long long value = std::strtoll(env, &end, 10);
  if (end == nullptr || *end != '\0' || value <= 0) {
    fail_config("cli", "enumeration_bound",
                "COUSIN_MAX_ENUM must be a positive integer, got '" +
                    std::string(env) + "'");
  }
  return value;
}

}  // namespace cousin
