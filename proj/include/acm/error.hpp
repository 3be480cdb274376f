#pragma once

#include <stdexcept>
#include <string>

namespace acm {

// Base for every error raised by the library. Callers that only need to
// report and continue can catch this one type.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class DomainError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace acm
