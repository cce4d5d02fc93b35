// Copyright 2026 The Concord Authors
// Licensed under the Apache License, Version 2.0 (https://www.apache.org/licenses/LICENSE-2.0)

#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "concord/aaf.hpp"

namespace concord {

using ValueId = std::string;
using AgentId = std::string;

enum class LiftingPrinciple { Elitist, Democratic };

const char* to_string(LiftingPrinciple principle);
LiftingPrinciple principle_from_string(const std::string& name);

/// Reflexive-transitive "at least as good as" relation over a finite value
/// set, built as the closure of user-declared v1 >= v2 pairs. Cycles are
/// allowed and make their members mutually comparable.
class ValueOrder {
 public:
  ValueOrder() = default;
  ValueOrder(const std::set<ValueId>& values,
             const std::set<std::pair<ValueId, ValueId>>& geq_pairs);

  const std::vector<ValueId>& values() const { return values_; }
  bool contains(const ValueId& value) const;

  /// v1 >= v2 in the closure; DomainError on values outside the order.
  bool geq(const ValueId& v1, const ValueId& v2) const;

  friend bool operator==(const ValueOrder& a, const ValueOrder& b) {
    return a.values_ == b.values_ && a.geq_ == b.geq_;
  }

 private:
  int index(const ValueId& value) const;

  std::vector<ValueId> values_;  // sorted
  std::vector<std::vector<bool>> geq_;
};

// Lifts a value order to sets of values.
//
// Elitist: V1 >= V2 iff some v in V2 is a lower bound of all of V1. By that
// letter alone the empty set would outrank everything and nothing would
// outrank it, so comparisons touching {} are pinned first: {} >= {} holds,
// and any comparison between {} and a non-empty set fails both ways.
// Democratic: V1 >= V2 iff every v in V2 is dominated by some member of V1;
// its literal reading already treats {} the same way, no pin needed.
bool lift_elitist(const ValueOrder& order, const std::set<ValueId>& v1,
                  const std::set<ValueId>& v2);
bool lift_democratic(const ValueOrder& order, const std::set<ValueId>& v1,
                     const std::set<ValueId>& v2);
bool lift(const ValueOrder& order, LiftingPrinciple principle,
          const std::set<ValueId>& v1, const std::set<ValueId>& v2);

/// v1 outranks v2 and not conversely.
bool strictly_preferred(const ValueOrder& order, LiftingPrinciple principle,
                        const std::set<ValueId>& v1, const std::set<ValueId>& v2);

/// An attack graph enriched with the practical/epistemic split, the
/// stakeholders, the value order, and the val / pi annotations.
struct ValueFramework {
  Framework framework;
  std::set<ArgumentId> practical;
  std::set<ArgumentId> epistemic;
  std::set<AgentId> agents;
  ValueOrder order;
  std::map<ArgumentId, std::set<ValueId>> val;  // keyed by practical arguments
  std::map<ArgumentId, std::set<AgentId>> pi;   // keyed by every argument
};

/// Validates and assembles a ValueFramework:
/// - practical must be a subset of the framework's arguments; the rest are
///   epistemic;
/// - no attack may run from a practical argument to an epistemic one
///   (epistemic arguments may attack anything);
/// - val must mention only practical arguments and declared values; missing
///   practical entries get the empty set;
/// - pi must mention only member arguments and declared agents; missing
///   entries get the empty set.
/// Throws DomainError on violations.
ValueFramework make_value_framework(Framework framework, std::set<ArgumentId> practical,
                                    std::set<AgentId> agents, ValueOrder order,
                                    std::map<ArgumentId, std::set<ValueId>> val,
                                    std::map<ArgumentId, std::set<AgentId>> pi);

/// The plain attack graph with values and agents forgotten.
const Framework& reduce(const ValueFramework& vf);

/// Union of val over the practical members of `extension`.
std::set<ValueId> extension_values(const ValueFramework& vf, const Extension& extension);

/// Extensions under `semantics` whose value set no other extension's value
/// set strictly outranks. Canonical order, never empty.
std::vector<Extension> maximal_agreement(const ValueFramework& vf, Semantics semantics,
                                         LiftingPrinciple principle);

}  // namespace concord
