#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace scatfact {

// Base of every domain error the library raises. The CLI maps these to exit 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what), position_(position) {}
  // 1-based position of the offending character.
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// A parameter lies outside the range where an operation is defined.
class RangeError : public Error {
 public:
  using Error::Error;
};

// A query the oracle refuses to answer (unbalanced query under the filter,
// or wrong length).
class QueryRejected : public Error {
 public:
  using Error::Error;
};

// Oracle answers admit no word of the expected shape.
class ReconstructionError : public Error {
 public:
  using Error::Error;
};

}  // namespace scatfact
