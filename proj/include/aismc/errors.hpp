#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace aismc {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Pitch too close to +-pi/2 for the Euler-angle transform.
class SingularAttitude : public Error {
 public:
  explicit SingularAttitude(double pitch)
      : Error("singular attitude: |theta| = " + std::to_string(pitch) +
              " rad is inside the pi/2 guard band"),
        pitch_(pitch) {}
  [[nodiscard]] double pitch() const { return pitch_; }

 private:
  double pitch_;
};

class InvalidModel : public Error {
 public:
  using Error::Error;
};

class DegenerateLayout : public Error {
 public:
  using Error::Error;
};

class NonFiniteState : public Error {
 public:
  using Error::Error;
};

class UnknownTask : public Error {
 public:
  explicit UnknownTask(int id) : Error("unknown task id " + std::to_string(id)) {}
};

class EmptyWindow : public Error {
 public:
  using Error::Error;
};

class MismatchedRuns : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

/// Malformed configuration text. Line numbers are 1-based; 0 means unknown.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  [[nodiscard]] std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Well-formed configuration that violates a constraint.
class ValidationError : public Error {
 public:
  ValidationError(std::string field, const std::string& what)
      : Error(field + ": " + what), field_(std::move(field)) {}
  [[nodiscard]] const std::string& field() const { return field_; }

 private:
  std::string field_;
};

}  // namespace aismc
