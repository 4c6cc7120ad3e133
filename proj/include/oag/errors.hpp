#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace oag {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Operands built over different GroupSpecs.
struct SpecMismatch : Error {
  using Error::Error;
};

struct NotDivisible : Error {
  using Error::Error;
};

struct PreconditionError : Error {
  using Error::Error;
};

struct UnresolvedParameter : Error {
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

}  // namespace oag
