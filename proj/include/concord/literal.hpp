// Copyright 2026 The Concord Authors
// Licensed under the Apache License, Version 2.0 (https://www.apache.org/licenses/LICENSE-2.0)

#pragma once

#include <compare>
#include <string>

namespace concord {

/// A propositional atom or its negation. Rendered `atom` / `~atom`.
struct Literal {
  std::string atom;
  bool negated = false;

  Literal complement() const { return Literal{atom, !negated}; }
  std::string str() const { return negated ? "~" + atom : atom; }

  friend bool operator==(const Literal&, const Literal&) = default;
  friend auto operator<=>(const Literal&, const Literal&) = default;
};

/// A negation-aware parse of `text`: a leading '~' negates the atom.
Literal literal_from_string(const std::string& text);

/// What an argument concludes: either a literal, or that a named rule does
/// not apply in the situation at hand.
struct Conclusion {
  enum class Kind { Literal, Inapplicable };

  Kind kind = Kind::Literal;
  Literal literal;      // meaningful when kind == Literal
  std::string rule_id;  // meaningful when kind == Inapplicable

  static Conclusion of(Literal l) {
    return Conclusion{Kind::Literal, std::move(l), {}};
  }
  static Conclusion inapplicable(std::string rule) {
    return Conclusion{Kind::Inapplicable, {}, std::move(rule)};
  }

  std::string str() const {
    return kind == Kind::Literal ? literal.str() : "inapplicable(" + rule_id + ")";
  }

  friend bool operator==(const Conclusion&, const Conclusion&) = default;
  friend auto operator<=>(const Conclusion&, const Conclusion&) = default;
};

}  // namespace concord
