// Copyright 2026 The Concord Authors
// Licensed under the Apache License, Version 2.0 (https://www.apache.org/licenses/LICENSE-2.0)

#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace concord {

/// Base class of every error thrown by the engine.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// An operation was called with an argument outside its domain
/// (unknown argument id, unknown value, subset not in the framework, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A file could not be read or written.
class IoError : public Error {
 public:
  using Error::Error;
};

/// Scenario text was rejected. Carries the 1-based source position of the
/// first offending token and, for grammar errors, the tokens that would
/// have been accepted there.
class ParseError : public Error {
 public:
  ParseError(int line, int column, std::string message,
             std::vector<std::string> expected = {});

  int line() const { return line_; }
  int column() const { return column_; }
  const std::string& message() const { return message_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  static std::string format(int line, int column, const std::string& message);

  int line_;
  int column_;
  std::string message_;
  std::vector<std::string> expected_;
};

/// Argument construction failed (derivation cap exceeded, unmatched alias).
class CompileError : public Error {
 public:
  using Error::Error;
};

}  // namespace concord
