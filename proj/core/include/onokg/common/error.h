#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace onokg {

// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A value violates a type invariant (literal subject, relative IRI, ...).
class ValidationError : public Error {
 public:
  ValidationError(std::string position, const std::string& what)
      : Error(position + ": " + what), position_(std::move(position)) {}
  const std::string& position() const { return position_; }

 private:
  std::string position_;
};

// Text that does not conform to one of the accepted grammars. Line and
// column are 1-based; zero means "unknown".
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t line, std::size_t column, const std::string& what)
      : Error("line " + std::to_string(line) + ", column " +
              std::to_string(column) + ": " + what),
        line_(line),
        column_(column),
        detail_(what) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::string& detail() const { return detail_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string detail_;
};

// A name (prefix, class, property) could not be resolved.
class UnknownNameError : public Error {
 public:
  UnknownNameError(std::string kind, std::string name)
      : Error("unknown " + kind + " '" + name + "'"),
        kind_(std::move(kind)),
        name_(std::move(name)) {}
  const std::string& kind() const { return kind_; }
  const std::string& name() const { return name_; }

 private:
  std::string kind_;
  std::string name_;
};

// Missing or unreadable file, unwritable output path.
class IoError : public Error {
 public:
  IoError(std::string path, const std::string& what)
      : Error(path + ": " + what), path_(std::move(path)) {}
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

// Non-finite or singular numerics.
class NumericError : public Error {
 public:
  using Error::Error;
};

// Matrix or vector shapes that do not compose.
class DimensionError : public Error {
 public:
  DimensionError(std::size_t expected, std::size_t actual, const std::string& what)
      : Error(what + ": expected " + std::to_string(expected) + ", got " + std::to_string(actual)),
        expected_(expected),
        actual_(actual) {}
  std::size_t expected() const { return expected_; }
  std::size_t actual() const { return actual_; }

 private:
  std::size_t expected_;
  std::size_t actual_;
};

}  // namespace onokg
