#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cmred {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidPermutation : public Error {
 public:
  using Error::Error;
};

/// A configured size limit was hit; the computation was not attempted.
class LimitExceeded : public Error {
 public:
  using Error::Error;
};

class ElementCapExceeded : public LimitExceeded {
 public:
  using LimitExceeded::LimitExceeded;
};

class SubsetCapExceeded : public LimitExceeded {
 public:
  using LimitExceeded::LimitExceeded;
};

class BruteCapExceeded : public LimitExceeded {
 public:
  using LimitExceeded::LimitExceeded;
};

class SubgroupNotContained : public Error {
 public:
  using Error::Error;
};

class UnsupportedParameter : public Error {
 public:
  using Error::Error;
};

/// Malformed group spec or group file. `position` is a 0-based character
/// offset into the offending text when one is meaningful.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position = 0)
      : Error(what), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

}  // namespace cmred
