#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace coeven {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidVertex : public Error {
 public:
  using Error::Error;
};

class NotAnEdge : public Error {
 public:
  using Error::Error;
};

/// A vertex set handed to a lift does not satisfy the co-even predicate on its graph.
class InvalidCertificate : public Error {
 public:
  using Error::Error;
};

class TooLargeForOracle : public Error {
 public:
  using Error::Error;
};

/// Graph order beyond what a bitmask kernel or the codec supports.
class UnsupportedSize : public Error {
 public:
  using Error::Error;
};

class RangeError : public Error {
 public:
  using Error::Error;
};

/// Operation/relation combination that has no meaning.
class InvalidQuery : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : Error(what + " (byte " + std::to_string(offset) + ")"), offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace coeven
