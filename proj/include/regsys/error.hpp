#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace regsys {

// Base of every error raised by the library. The CLI maps ParseError to exit
// code 2 and every other Error to exit code 3.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

class OrderingError : public Error {
 public:
  using Error::Error;
};

class NotProgressiveError : public Error {
 public:
  NotProgressiveError(std::size_t coordinate, const std::string& what)
      : Error(what), coordinate_(coordinate) {}

  // 1-based index of the coordinate that never fires in the tail.
  std::size_t coordinate() const { return coordinate_; }

 private:
  std::size_t coordinate_;
};

class CoverageError : public Error {
 public:
  using Error::Error;
};

class UnknownInputError : public Error {
 public:
  using Error::Error;
};

class CompositionError : public Error {
 public:
  using Error::Error;
};

class ValidationError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class OverflowError : public Error {
 public:
  using Error::Error;
};

}  // namespace regsys
