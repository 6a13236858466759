#pragma once

#include <stdexcept>
#include <string>

namespace areagrowth {

enum class ErrorKind {
  InvalidArgument,
  CapExceeded,
  InsufficientSamples,
  NonPositiveArea,
  NoWitness,
  InsufficientRows,
  UncertifiedPacket,
};

const char* to_string(ErrorKind kind) noexcept;

/// Exception carrying a machine-readable kind; the CLI maps kinds to exit codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  [[nodiscard]] ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace areagrowth
