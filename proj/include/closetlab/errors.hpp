#pragma once

#include <stdexcept>

namespace closetlab {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A structure, operator or map violates a construction precondition.
class InvalidStructure : public Error {
 public:
  using Error::Error;
};

// Malformed input document or command line.
class ParseError : public Error {
 public:
  using Error::Error;
};

// A configured size or work limit was exceeded.
class CapError : public Error {
 public:
  using Error::Error;
};

}  // namespace closetlab
