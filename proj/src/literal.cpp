// Copyright 2026 The Concord Authors
// Licensed under the Apache License, Version 2.0 (https://www.apache.org/licenses/LICENSE-2.0)

#include "concord/literal.hpp"

#include "concord/errors.hpp"

namespace concord {

Literal literal_from_string(const std::string& text) {
  if (!text.empty() && text.front() == '~') {
    if (text.size() == 1) throw DomainError("'~' must be followed by an atom");
    return Literal{text.substr(1), true};
  }
  if (text.empty()) throw DomainError("empty literal");
  return Literal{text, false};
}

}  // namespace concord
