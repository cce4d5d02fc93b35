// Copyright 2026 The Concord Authors
// Licensed under the Apache License, Version 2.0 (https://www.apache.org/licenses/LICENSE-2.0)

#include "concord/output.hpp"

namespace concord {

using nlohmann::ordered_json;

ordered_json extension_json(const ValueFramework& vf, const Extension& extension) {
  ordered_json out;
  out["members"] = extension.members;
  out["values"] = extension_values(vf, extension);
  return out;
}

ordered_json justification_json(const JustificationNode& node) {
  ordered_json out;
  out["argument"] = node.argument;
  out["accepted"] = node.accepted;
  out["reference"] = node.reference;
  if (node.accepted) {
    out["attackers"] = ordered_json::array();
    for (const auto& child : node.attackers) {
      out["attackers"].push_back(justification_json(child));
    }
  } else {
    out["cited"] = ordered_json::array();
    for (const auto& child : node.cited) {
      out["cited"].push_back(justification_json(child));
    }
  }
  return out;
}

ordered_json explanation_json(const Explanation& explanation) {
  ordered_json out;
  out["target"] = explanation.target.str();
  out["target_kind"] =
      explanation.target.kind == ExplainTarget::Kind::Literal ? "literal" : "argument";
  out["semantics"] = to_string(explanation.semantics);
  out["principle"] = to_string(explanation.principle);
  out["accepted"] = explanation.accepted;
  out["argument"] = explanation.argument;
  out["derivability"] = ordered_json::array();
  for (const auto& line : explanation.derivability) {
    ordered_json entry;
    entry["kind"] = line.kind;
    if (!line.rule_id.empty()) entry["rule"] = line.rule_id;
    entry["text"] = line.text;
    out["derivability"].push_back(std::move(entry));
  }
  out["chosen"] = ordered_json{{"members", explanation.chosen.members},
                               {"values", explanation.chosen_values}};
  out["tie"] = explanation.tie;
  out["contrast"] = ordered_json::array();
  for (const auto& entry : explanation.contrast) {
    ordered_json e;
    e["members"] = entry.extension.members;
    e["values"] = entry.values;
    e["tied"] = entry.tied;
    out["contrast"].push_back(std::move(e));
  }
  out["justification"] = justification_json(explanation.justification);
  out["text"] = render_text(explanation);
  return out;
}

ordered_json scenario_summary_json(const Scenario& scenario) {
  ordered_json out;
  out["stakeholders"] = scenario.stakeholders.size();
  out["values"] = scenario.values.size();
  out["order_pairs"] = scenario.order_pairs.size();
  if (scenario.kind == ScenarioKind::Structured) {
    out["observations"] = scenario.observations.size();
    out["assumptions"] = scenario.assumptions.size();
    out["beliefs"] = scenario.beliefs.size();
    out["norms"] = scenario.norms.size();
    out["standpoints"] = scenario.standpoints.size();
    out["aliases"] = scenario.aliases.size();
  } else {
    out["arguments"] = scenario.arguments.size();
    out["attacks"] = scenario.attacks.size();
  }
  return out;
}

}  // namespace concord
