// Copyright 2026 The Concord Authors
// Licensed under the Apache License, Version 2.0 (https://www.apache.org/licenses/LICENSE-2.0)

#include "concord/errors.hpp"

#include <sstream>

namespace concord {

std::string ParseError::format(int line, int column, const std::string& message) {
  std::ostringstream out;
  out << line << ":" << column << ": " << message;
  return out.str();
}

ParseError::ParseError(int line, int column, std::string message,
                       std::vector<std::string> expected)
    : Error(format(line, column, message)),
      line_(line),
      column_(column),
      message_(std::move(message)),
      expected_(std::move(expected)) {}

}  // namespace concord
