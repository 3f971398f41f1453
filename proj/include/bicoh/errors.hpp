#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bicoh {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& msg, std::size_t pos)
      : Error(msg + " at offset " + std::to_string(pos)), pos_(pos) {}
  std::size_t position() const { return pos_; }

 private:
  std::size_t pos_;
};

class TypeError : public Error {
 public:
  enum class Kind { CompositionMismatch, ConstantNotInSystem, MalformedTerm, TypeMismatch };

  TypeError(Kind kind, const std::string& msg, std::string expected = {}, std::string found = {})
      : Error(msg), kind_(kind), expected_(std::move(expected)), found_(std::move(found)) {}

  Kind kind() const { return kind_; }
  const std::string& expected() const { return expected_; }
  const std::string& found() const { return found_; }

 private:
  Kind kind_;
  std::string expected_;
  std::string found_;
};

// A documented precondition of an operation does not hold for its input.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

class PathError : public Error {
 public:
  using Error::Error;
};

}  // namespace bicoh
