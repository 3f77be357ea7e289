#ifndef NEGDER_ERRORS_HPP
#define NEGDER_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace negder {

// Malformed textual input (polynomial or system file). `position` is a byte
// offset into the parsed text; line/column resolution happens at the CLI layer.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string message, std::size_t position)
      : std::runtime_error(std::move(message)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_ = 0;
};

// Semantically invalid input: non-positive weights, inhomogeneous generators,
// violated preconditions, bad counter-example constants.
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& message) : std::runtime_error(message) {}
};

// A computation exceeded its configured budget (Groebner step cap). Never a
// silent truncation: the partial state is discarded and this is thrown.
class ResourceLimitError : public std::runtime_error {
 public:
  explicit ResourceLimitError(const std::string& message) : std::runtime_error(message) {}
};

// An assertion backed by a theorem failed. This means either the input was
// mislabelled or the implementation is wrong; both are fatal. The message
// carries a full dump of the offending system and certificate.
class TheoryViolation : public std::logic_error {
 public:
  explicit TheoryViolation(const std::string& message) : std::logic_error(message) {}
};

}  // namespace negder

#endif
