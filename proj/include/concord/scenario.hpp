// Copyright 2026 The Concord Authors
// Licensed under the Apache License, Version 2.0 (https://www.apache.org/licenses/LICENSE-2.0)

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "concord/literal.hpp"
#include "concord/values.hpp"

namespace concord {

/// A defeasible rule contributed by one stakeholder: if all antecedents
/// hold, the consequent presumably holds. Empty antecedents = always fires.
struct Norm {
  std::string id;
  AgentId stakeholder;
  std::vector<ValueId> values;       // sorted, unique
  std::vector<Literal> antecedents;  // sorted, unique
  Literal consequent;

  friend bool operator==(const Norm&, const Norm&) = default;
};

/// A stakeholder claim that, under the stated conditions, a norm does not
/// apply.
struct Standpoint {
  std::string id;
  AgentId stakeholder;
  std::vector<Literal> antecedents;  // sorted, unique
  std::string target_norm;

  friend bool operator==(const Standpoint&, const Standpoint&) = default;
};

/// Background knowledge: an epistemic rule owned by no stakeholder.
struct Belief {
  std::string id;
  std::vector<Literal> antecedents;  // sorted, unique
  Literal consequent;

  friend bool operator==(const Belief&, const Belief&) = default;
};

/// A sensed fact. Observations are beyond dispute: arguments consisting of
/// an observation are never attacked.
struct Observation {
  Literal literal;

  friend bool operator==(const Observation&, const Observation&) = default;
};

/// A defeasible premise; arguments resting on it can be undermined.
struct Assumption {
  Literal literal;

  friend bool operator==(const Assumption&, const Assumption&) = default;
};

/// Names a derivation so scenarios can refer to constructed arguments:
/// either a leaf literal (matching an observation or assumption argument)
/// or rule(child, ...). In scenario text a leaf may also name an earlier
/// alias.
struct DerivationSketch {
  bool leaf = true;
  Literal literal;      // leaf payload
  std::string rule_id;  // node payload
  std::vector<DerivationSketch> children;

  std::string str() const;

  friend bool operator==(const DerivationSketch&, const DerivationSketch&) = default;
};

struct ArgumentAlias {
  ArgumentId name;
  DerivationSketch sketch;

  friend bool operator==(const ArgumentAlias&, const ArgumentAlias&) = default;
};

/// An argument given directly, without a derivation behind it.
struct AbstractArgument {
  ArgumentId id;
  bool practical = false;
  std::vector<ValueId> values;  // sorted, unique; practical only
  std::vector<AgentId> agents;  // sorted, unique

  friend bool operator==(const AbstractArgument&, const AbstractArgument&) = default;
};

enum class ScenarioKind { Abstract, Structured };

const char* to_string(ScenarioKind kind);

/// Parsed scenario input. Abstract scenarios carry the framework directly;
/// structured ones carry the normative material arguments are built from.
struct Scenario {
  std::string name;
  ScenarioKind kind = ScenarioKind::Abstract;

  std::vector<AgentId> stakeholders;  // declaration order
  std::vector<ValueId> values;        // declaration order
  std::vector<std::pair<ValueId, ValueId>> order_pairs;  // (higher, lower), sorted, unique

  // structured kind
  std::vector<Observation> observations;
  std::vector<Assumption> assumptions;
  std::vector<Belief> beliefs;
  std::vector<Norm> norms;
  std::vector<Standpoint> standpoints;
  std::vector<ArgumentAlias> aliases;

  // abstract kind
  std::vector<AbstractArgument> arguments;
  std::vector<AttackPair> attacks;  // sorted, unique

  ValueOrder value_order() const;

  friend bool operator==(const Scenario&, const Scenario&) = default;
};

/// The framework an abstract scenario states literally.
/// DomainError if the scenario is structured.
ValueFramework abstract_value_framework(const Scenario& scenario);

}  // namespace concord
