#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace starring {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class OrderLimitError : public Error {
 public:
  OrderLimitError(std::size_t requested, std::size_t limit)
      : Error("ring order " + std::to_string(requested) + " exceeds the configured maximum " +
              std::to_string(limit)),
        requested_(requested),
        limit_(limit) {}

  std::size_t requested() const noexcept { return requested_; }
  std::size_t limit() const noexcept { return limit_; }

 private:
  std::size_t requested_;
  std::size_t limit_;
};

class NoncommutativeBaseError : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error("parse error at position " + std::to_string(position) + ": " + what),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class NoCentralCover : public Error {
 public:
  using Error::Error;
};

class UnknownVertex : public Error {
 public:
  using Error::Error;
};

class SplitCapExceeded : public Error {
 public:
  SplitCapExceeded(std::size_t components, std::size_t max_components)
      : Error("graph minus the cut vertex has " + std::to_string(components) +
              " components; split enumeration is capped at " + std::to_string(max_components)),
        components_(components) {}

  std::size_t components() const noexcept { return components_; }

 private:
  std::size_t components_;
};

}  // namespace starring
