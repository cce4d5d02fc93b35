// Copyright 2026 The Concord Authors
// Licensed under the Apache License, Version 2.0 (https://www.apache.org/licenses/LICENSE-2.0)

#include "concord/scenario.hpp"

#include <sstream>

namespace concord {

const char* to_string(ScenarioKind kind) {
  switch (kind) {
    case ScenarioKind::Abstract: return "abstract";
    case ScenarioKind::Structured: return "structured";
  }
  throw DomainError("unhandled scenario kind");
}

std::string DerivationSketch::str() const {
  if (leaf) return literal.str();
  std::ostringstream out;
  out << rule_id << "(";
  for (std::size_t i = 0; i < children.size(); ++i) {
    if (i > 0) out << ", ";
    out << children[i].str();
  }
  out << ")";
  return out.str();
}

ValueOrder Scenario::value_order() const {
  return ValueOrder(std::set<ValueId>(values.begin(), values.end()),
                    std::set<std::pair<ValueId, ValueId>>(order_pairs.begin(),
                                                          order_pairs.end()));
}

ValueFramework abstract_value_framework(const Scenario& scenario) {
  if (scenario.kind != ScenarioKind::Abstract) {
    throw DomainError("scenario '" + scenario.name + "' is not abstract");
  }
  std::set<ArgumentId> ids;
  std::set<ArgumentId> practical;
  std::map<ArgumentId, std::set<ValueId>> val;
  std::map<ArgumentId, std::set<AgentId>> pi;
  for (const auto& a : scenario.arguments) {
    ids.insert(a.id);
    if (a.practical) {
      practical.insert(a.id);
      val[a.id] = std::set<ValueId>(a.values.begin(), a.values.end());
    }
    pi[a.id] = std::set<AgentId>(a.agents.begin(), a.agents.end());
  }
  return make_value_framework(
      Framework(ids, std::set<AttackPair>(scenario.attacks.begin(), scenario.attacks.end())),
      std::move(practical),
      std::set<AgentId>(scenario.stakeholders.begin(), scenario.stakeholders.end()),
      scenario.value_order(), std::move(val), std::move(pi));
}

}  // namespace concord
