#pragma once

#include <stdexcept>
#include <string>

namespace fspi {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
  /// Short machine-readable category, e.g. "invalid_argument".
  virtual const char* kind() const noexcept { return "error"; }
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "invalid_argument"; }
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "dimension_mismatch"; }
};

/// Measurement sequence, plan and signal do not describe the same acquisition.
class ModeMismatch : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "mode_mismatch"; }
};

class IoError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "io_error"; }
};

class ParseError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "parse_error"; }
};

}  // namespace fspi
