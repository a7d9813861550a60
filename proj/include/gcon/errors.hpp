#pragma once

#include <stdexcept>
#include <string>

namespace gcon {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition or structural invariant was violated by the caller's input.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Input is valid but exceeds a size guard of the exhaustive kernels.
class GuardError : public Error {
 public:
  using Error::Error;
};

enum class ParseErrorKind {
  MalformedHeader,
  MalformedLine,
  CountMismatch,
  IndexOutOfRange,
  DuplicateEdge,
  SelfLoop,
  IncompleteTripartition,
  NonTripartiteEdge,
  BadTerminalSet,
  DuplicateTriple,
  BadClause,
};

const char* to_string(ParseErrorKind kind);

class ParseError : public Error {
 public:
  ParseError(ParseErrorKind kind, int line, const std::string& detail);

  ParseErrorKind kind() const { return kind_; }
  /// 1-based line number of the offending line.
  int line() const { return line_; }

 private:
  ParseErrorKind kind_;
  int line_;
};

}  // namespace gcon
