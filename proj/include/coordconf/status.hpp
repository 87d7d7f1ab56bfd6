#pragma once

#include <string>
#include <utility>
#include <variant>

namespace coordconf {

enum class ErrorCode {
  UnknownComponent,
  UnknownPort,
  UnknownProperty,
  UnknownOperation,
  UnknownConnection,
  UnknownConfiguration,
  UnknownComponentType,
  UnknownTarget,
  DuplicateId,
  DuplicateConnection,
  IllegalTransition,
  ComponentFatal,
  FatalEndpoint,
  DestroyWhileRunning,
  KindMismatch,
  ArityMismatch,
  QueueFull,
  EmptyStack,
  ParseError,
  IoError,
};

const char* error_code_name(ErrorCode code);

struct Error {
  ErrorCode code;
  std::string message;

  std::string to_string() const;
};

/// Value-or-error result used throughout the runtime. Registry and engine
/// failures are ordinary data, not exceptions: the configurator turns them
/// into status events and reports.
template <typename T>
class Result {
 public:
  Result(T value) : data_(std::move(value)) {}
  Result(Error error) : data_(std::move(error)) {}
  Result(ErrorCode code, std::string message)
      : data_(Error{code, std::move(message)}) {}

  bool ok() const { return std::holds_alternative<T>(data_); }
  explicit operator bool() const { return ok(); }

  const T& value() const { return std::get<T>(data_); }
  T& value() { return std::get<T>(data_); }
  const Error& error() const { return std::get<Error>(data_); }

 private:
  std::variant<T, Error> data_;
};

class Status {
 public:
  Status() = default;
  Status(Error error) : error_(std::move(error)) {}
  Status(ErrorCode code, std::string message)
      : error_(Error{code, std::move(message)}) {}

  static Status ok_status() { return Status(); }

  bool ok() const { return !std::holds_alternative<Error>(error_); }
  explicit operator bool() const { return ok(); }
  const Error& error() const { return std::get<Error>(error_); }

 private:
  std::variant<std::monostate, Error> error_;
};

}  // namespace coordconf
