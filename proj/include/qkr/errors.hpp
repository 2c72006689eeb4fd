#ifndef QKR_ERRORS_HPP
#define QKR_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qkr {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Invalid argument: out-of-range choice, dimension mismatch, degenerate
// weights, malformed parameter vectors.
class InputError : public Error {
 public:
  explicit InputError(const std::string& what) : Error(what) {}
};

// Operation defined only for a specific game shape (e.g. the five-class
// outcome view exists only for n = m = 3).
class UnsupportedShapeError : public InputError {
 public:
  explicit UnsupportedShapeError(const std::string& what) : InputError(what) {}
};

// Malformed serialized input (JSON documents, parameter files).
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what) : Error(what) {}
};

// File system failure; message carries the offending path.
class IoError : public Error {
 public:
  explicit IoError(const std::string& what) : Error(what) {}
};

}  // namespace qkr

#endif
