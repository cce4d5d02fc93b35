// Copyright 2026 The Concord Authors
// Licensed under the Apache License, Version 2.0 (https://www.apache.org/licenses/LICENSE-2.0)

#pragma once

#include <string>
#include <vector>

#include "concord/compiler.hpp"

namespace concord {

/// One node of a why-accepted / why-rejected tree.
///
/// An accepted node carries one child per attacker, each rejected. A
/// rejected node cites at most one accepted counter-attacker from the
/// extension (the lexicographically least, for determinism); a rejected
/// node with no citation is merely undefended. A node whose argument
/// already appeared on the path to the root is marked `reference` and not
/// expanded further, which keeps the tree finite on cyclic graphs.
struct JustificationNode {
  ArgumentId argument;
  bool accepted = false;
  bool reference = false;
  std::vector<JustificationNode> attackers;  // accepted nodes: every attacker
  std::vector<JustificationNode> cited;      // rejected nodes: 0 or 1 accepted attacker
};

/// Why `id` is in (or out of) the admissible set `extension`.
/// DomainError if `extension` is not admissible or `id` unknown.
JustificationNode justification_tree(const Framework& framework, const Extension& extension,
                                     const ArgumentId& id);

/// What an explanation is asked about: a conclusion literal (structured
/// scenarios) or an argument by name.
struct ExplainTarget {
  enum class Kind { Literal, Argument };
  Kind kind = Kind::Argument;
  Literal literal;
  ArgumentId argument;

  static ExplainTarget for_literal(Literal l) {
    return ExplainTarget{Kind::Literal, std::move(l), {}};
  }
  static ExplainTarget for_argument(ArgumentId id) {
    return ExplainTarget{Kind::Argument, {}, std::move(id)};
  }

  std::string str() const {
    return kind == Kind::Literal ? literal.str() : argument;
  }
};

/// One line of the derivability section.
struct DerivabilityLine {
  std::string kind;     // observation | assumption | norm | belief | standpoint | argument
  std::string rule_id;  // rule kinds only
  std::string text;
};

/// Another extension of the same semantics, listed for contrast.
struct ContrastEntry {
  Extension extension;
  std::set<ValueId> values;
  bool tied = false;  // tied winners; false = outranked by the chosen set
};

struct Explanation {
  ExplainTarget target;
  Semantics semantics = Semantics::Preferred;
  LiftingPrinciple principle = LiftingPrinciple::Democratic;

  bool accepted = false;
  ArgumentId argument;  // the argument the verdict is about

  std::vector<DerivabilityLine> derivability;

  Extension chosen;
  std::set<ValueId> chosen_values;
  bool tie = false;
  std::vector<ContrastEntry> contrast;  // the other extensions, canonical order

  JustificationNode justification;
};

/// Builds the three-part explanation: how the target is derived, which
/// extension wins the agreement comparison, and why the target argument is
/// accepted or rejected with respect to it.
/// DomainError when the target matches nothing; the message lists what can
/// be asked about.
Explanation explain_decision(const Compiled& compiled, Semantics semantics,
                             LiftingPrinciple principle, const ExplainTarget& target);

std::string render_text(const Explanation& explanation);

}  // namespace concord
