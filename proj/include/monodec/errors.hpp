#ifndef MONODEC_ERRORS_HPP_
#define MONODEC_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace monodec {

// Input-level failure: bad syntax, bad symbols, malformed documents.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string msg, std::size_t position)
      : std::runtime_error(msg + " (at position " + std::to_string(position) +
                           ")"),
        position_(position) {}
  explicit ParseError(std::string msg)
      : std::runtime_error(std::move(msg)), position_(0) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// Alphabet constraint violations (letter outside declared alphabet,
// mismatched operand alphabets, empty effective alphabet).
class AlphabetError : public std::runtime_error {
 public:
  explicit AlphabetError(std::string msg)
      : std::runtime_error(std::move(msg)) {}
};

// A configured cap was hit (DFA states, monoid elements, tuple budget).
class ResourceLimitError : public std::runtime_error {
 public:
  explicit ResourceLimitError(std::string msg)
      : std::runtime_error(std::move(msg)) {}
};

// Two independent routes to the same verdict disagreed. Never caught and
// resolved silently: it means the build is wrong.
class InternalError : public std::logic_error {
 public:
  explicit InternalError(std::string msg)
      : std::logic_error(std::move(msg)) {}
};

}  // namespace monodec

#endif  // MONODEC_ERRORS_HPP_
