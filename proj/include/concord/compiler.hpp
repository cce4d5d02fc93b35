// Copyright 2026 The Concord Authors
// Licensed under the Apache License, Version 2.0 (https://www.apache.org/licenses/LICENSE-2.0)

#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "concord/scenario.hpp"

namespace concord {

/// An argument built by rule chaining. Identity is content-based: `canonical`
/// is the derivation written as rule(children...) over sorted children, and
/// the default id is a hash of it, so equal derivations get equal ids on
/// every run. Scenario aliases replace ids with stable names.
struct StructuredArgument {
  enum class Kind { Observation, Assumption, NormStep, BeliefStep, StandpointStep };

  ArgumentId id;
  std::string canonical;
  Kind kind = Kind::Observation;
  std::string top_rule;  // norm/belief/standpoint id for step kinds
  Conclusion conclusion;

  std::vector<int> children;  // direct sub-arguments, indices into the pool
  std::vector<int> subs;      // every sub-argument including self, ascending

  std::set<std::string> uses_norms;
  std::set<std::string> uses_beliefs;
  std::set<std::string> uses_standpoints;
  std::set<Literal> uses_assumptions;
  std::set<Literal> premises;  // observation and assumption literals at the leaves
  std::set<Literal> literals;  // every literal concluded inside the derivation

  bool is_observation() const { return kind == Kind::Observation; }
  bool practical() const { return !uses_norms.empty(); }
};

struct CompileOptions {
  std::size_t max_arguments = 10000;
};

/// A scenario realized as a value framework plus, for structured scenarios,
/// the constructed arguments behind each framework node.
struct Compiled {
  ScenarioKind kind = ScenarioKind::Abstract;
  Scenario scenario;
  ValueFramework vf;
  std::vector<StructuredArgument> arguments;  // pool; empty for abstract input
  std::map<ArgumentId, int> by_id;            // framework id -> pool index

  bool structured() const { return kind == ScenarioKind::Structured; }
  const StructuredArgument* find(const ArgumentId& id) const;
};

/// Exhaustive forward chaining of norms, beliefs and standpoints over the
/// observations and assumptions. Every sub-argument is materialized; every
/// argument's literal set is consistent; a rule application adding no new
/// literal to its derivation is skipped, which makes the closure finite.
/// CompileError if more than options.max_arguments arguments arise.
std::vector<StructuredArgument> construct_arguments(const Scenario& scenario,
                                                    const CompileOptions& options = {});

/// Rebut, undercut and undermine pairs over the pool, with attacks from
/// practical onto epistemic arguments dropped (epistemic arguments may
/// attack anything; practical ones may not attack epistemic ones).
/// Observation arguments are never attacked.
std::vector<AttackPair> compute_attacks(const std::vector<StructuredArgument>& pool);

Compiled compile(const Scenario& scenario, const CompileOptions& options = {});

/// Uniform entry point: abstract scenarios load directly, structured ones
/// compile.
Compiled realize(const Scenario& scenario, const CompileOptions& options = {});

}  // namespace concord
