#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace needfinder {

// Error kinds map onto the CLI exit codes: 1 usage, 2 untrainable, 3 malformed input.
enum class ErrorKind {
  usage = 1,
  untrainable = 2,
  malformed = 3,
  internal = 4,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string message)
      : std::runtime_error(std::move(message)), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

  int exit_code() const noexcept {
    return kind_ == ErrorKind::internal ? 1 : static_cast<int>(kind_);
  }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

}  // namespace needfinder
