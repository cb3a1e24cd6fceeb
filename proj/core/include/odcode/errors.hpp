#pragma once

#include <stdexcept>
#include <string>

namespace odcode {

// Malformed graph, clutter or formula text. line is 1-based, 0 when unknown.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line = 0)
      : std::runtime_error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Requested code kind does not exist for the graph (twins or isolated vertices).
class InadmissibleGraph : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace odcode
