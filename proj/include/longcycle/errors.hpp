#pragma once

#include <stdexcept>
#include <string>

namespace longcycle {

enum class ErrorKind {
  MalformedInput,
  AsymmetricAdjacency,
  EulerViolation,
  Disconnected,
  BadHeader,
  TruncatedRecord,
  TooSmall,
  NotThreeConnected,
  NotEssentially4Connected,
  NotACycle,
  NotExtendable,
  EmptySide,
  ExtendableEdgePresent,
  ViolationsPresent,
  BudgetExceeded,
  SearchExhausted,
  NotTriangulation,
  PostCheckFailed,
  UnknownName,
  InternalError,
};

const char* error_kind_name(ErrorKind k);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& msg)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + msg), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind k, const std::string& msg) { throw Error(k, msg); }

inline void require(bool cond, ErrorKind k, const std::string& msg) {
  if (!cond) fail(k, msg);
}

}  // namespace longcycle
