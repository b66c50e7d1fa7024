#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace powerwords {

// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A data file (lexicon, word list, gazetteer, manifest) could not be read or
// failed validation. `line()` is 1-based, 0 when the error is not tied to a
// particular line.
class DataFileError : public Error {
 public:
  DataFileError(std::string source, std::size_t line, const std::string& what)
      : Error(format(source, line, what)), source_(std::move(source)), line_(line) {}

  const std::string& source() const { return source_; }
  std::size_t line() const { return line_; }

 private:
  static std::string format(const std::string& source, std::size_t line,
                            const std::string& what) {
    std::string out = source.empty() ? std::string("<stream>") : source;
    if (line > 0) out += ":" + std::to_string(line);
    return out + ": " + what;
  }

  std::string source_;
  std::size_t line_;
};

// The text under analysis is unusable (invalid UTF-8, unreadable, empty
// after cleaning).
class InputError : public Error {
 public:
  using Error::Error;
};

// A computation needs more text than it was given (zero words, too few
// sentences for SMOG).
class InsufficientTextError : public Error {
 public:
  using Error::Error;
};

// Caller passed arguments that violate an operation's precondition.
class InvalidArgumentError : public Error {
 public:
  using Error::Error;
};

}  // namespace powerwords
