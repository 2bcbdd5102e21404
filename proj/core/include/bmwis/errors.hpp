#ifndef BMWIS_ERRORS_HPP
#define BMWIS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace bmwis {

// Error thrown when parsing an instance file; carries the offending line.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

class NotBipartiteError : public std::runtime_error {
 public:
  explicit NotBipartiteError(const std::string& what) : std::runtime_error(what) {}
};

// A configured size cap (brute-force vertex limit, DP cell limit, ...) was exceeded.
class CapExceededError : public std::runtime_error {
 public:
  explicit CapExceededError(const std::string& what) : std::runtime_error(what) {}
};

// Checked integer arithmetic overflowed; values are never wrapped.
class OverflowError : public std::runtime_error {
 public:
  explicit OverflowError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace bmwis

#endif
