#pragma once

#include <stdexcept>
#include <string>

#include "hs/geometry.hpp"

namespace hs {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input file or unparseable value.
class ParseError : public Error {
 public:
  using Error::Error;
};

// Raster operands that must share a grid do not.
class GridMismatchError : public Error {
 public:
  using Error::Error;
};

// Grid does not cover the geometry an operation needs; carries the
// bounding box that would have been sufficient.
class CoverageError : public Error {
 public:
  CoverageError(const std::string& message, Box2 required)
      : Error(message), required_box(required) {}
  Box2 required_box;
};

class NoSolutionError : public Error {
 public:
  using Error::Error;
};

class ValidationError : public Error {
 public:
  using Error::Error;
};

}  // namespace hs
