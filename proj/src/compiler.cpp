// Copyright 2026 The Concord Authors
// Licensed under the Apache License, Version 2.0 (https://www.apache.org/licenses/LICENSE-2.0)

#include "concord/compiler.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <sstream>

namespace concord {

namespace {

std::string fnv1a_hex(const std::string& text) {
  std::uint64_t hash = 14695981039346656037ull;
  for (unsigned char c : text) {
    hash ^= c;
    hash *= 1099511628211ull;
  }
  std::ostringstream out;
  out << std::hex;
  for (int shift = 60; shift >= 0; shift -= 4) {
    out << ((hash >> shift) & 0xf);
  }
  return out.str();
}

/// Every rule looks the same to the chaining loop.
struct Rule {
  StructuredArgument::Kind kind;
  std::string id;
  std::vector<Literal> antecedents;
  Conclusion conclusion;
};

struct Builder {
  const Scenario& scenario;
  const CompileOptions& options;

  std::vector<StructuredArgument> pool;
  std::map<std::string, int> by_canonical;
  std::vector<Rule> rules;

  explicit Builder(const Scenario& s, const CompileOptions& o) : scenario(s), options(o) {}

  void validate() {
    if (scenario.kind != ScenarioKind::Structured) {
      throw DomainError("scenario '" + scenario.name + "' is not structured");
    }
    std::set<std::string> rule_ids;
    for (const auto& n : scenario.norms) {
      if (!rule_ids.insert(n.id).second) throw CompileError("duplicate rule id '" + n.id + "'");
      for (const auto& a : n.antecedents) {
        if (a == n.consequent) {
          throw CompileError("norm '" + n.id + "' concludes one of its own antecedents");
        }
      }
    }
    for (const auto& b : scenario.beliefs) {
      if (!rule_ids.insert(b.id).second) throw CompileError("duplicate rule id '" + b.id + "'");
      for (const auto& a : b.antecedents) {
        if (a == b.consequent) {
          throw CompileError("belief '" + b.id + "' concludes one of its own antecedents");
        }
      }
    }
    std::set<std::string> norm_ids;
    for (const auto& n : scenario.norms) norm_ids.insert(n.id);
    for (const auto& s : scenario.standpoints) {
      if (!rule_ids.insert(s.id).second) throw CompileError("duplicate rule id '" + s.id + "'");
      if (!norm_ids.count(s.target_norm)) {
        throw CompileError("standpoint '" + s.id + "' undercuts unknown norm '" +
                           s.target_norm + "'");
      }
    }
    std::set<Literal> observed;
    for (const auto& o : scenario.observations) {
      if (observed.count(o.literal.complement())) {
        throw CompileError("observations contradict each other on '" + o.literal.atom + "'");
      }
      observed.insert(o.literal);
    }
    for (const auto& a : scenario.assumptions) {
      if (observed.count(a.literal)) {
        throw CompileError("assumption '" + a.literal.str() +
                           "' duplicates an observation");
      }
    }
  }

  void collect_rules() {
    for (const auto& n : scenario.norms) {
      rules.push_back({StructuredArgument::Kind::NormStep, n.id, n.antecedents,
                       Conclusion::of(n.consequent)});
    }
    for (const auto& b : scenario.beliefs) {
      rules.push_back({StructuredArgument::Kind::BeliefStep, b.id, b.antecedents,
                       Conclusion::of(b.consequent)});
    }
    for (const auto& s : scenario.standpoints) {
      rules.push_back({StructuredArgument::Kind::StandpointStep, s.id, s.antecedents,
                       Conclusion::inapplicable(s.target_norm)});
    }
  }

  int add(StructuredArgument arg) {
    const auto it = by_canonical.find(arg.canonical);
    if (it != by_canonical.end()) return it->second;
    if (pool.size() >= options.max_arguments) {
      std::ostringstream msg;
      msg << "derivation space exceeds " << options.max_arguments
          << " arguments; raise the cap or trim the scenario";
      throw CompileError(msg.str());
    }
    const int index = static_cast<int>(pool.size());
    pool.push_back(std::move(arg));
    by_canonical[pool.back().canonical] = index;
    return index;
  }

  void seed() {
    for (const auto& o : scenario.observations) {
      StructuredArgument arg;
      arg.kind = StructuredArgument::Kind::Observation;
      arg.canonical = o.literal.str();
      arg.conclusion = Conclusion::of(o.literal);
      arg.premises = {o.literal};
      arg.literals = {o.literal};
      add(std::move(arg));
    }
    for (const auto& a : scenario.assumptions) {
      StructuredArgument arg;
      arg.kind = StructuredArgument::Kind::Assumption;
      arg.canonical = "assume(" + a.literal.str() + ")";
      arg.conclusion = Conclusion::of(a.literal);
      arg.premises = {a.literal};
      arg.literals = {a.literal};
      arg.uses_assumptions = {a.literal};
      add(std::move(arg));
    }
  }

  /// One rule application over concrete children; nullopt-style -1 when the
  /// result is inconsistent or adds nothing new.
  void apply(const Rule& rule, const std::vector<int>& children) {
    std::set<Literal> literals;
    for (int c : children) {
      literals.insert(pool[static_cast<std::size_t>(c)].literals.begin(),
                      pool[static_cast<std::size_t>(c)].literals.end());
    }
    if (rule.conclusion.kind == Conclusion::Kind::Literal) {
      // A step must extend the derivation; re-deriving a literal already
      // inside it is redundant and would make the closure infinite.
      if (literals.count(rule.conclusion.literal)) return;
      literals.insert(rule.conclusion.literal);
    }
    for (const auto& l : literals) {
      if (literals.count(l.complement())) return;  // internally inconsistent
    }

    std::vector<int> order(children.begin(), children.end());
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      return pool[static_cast<std::size_t>(a)].canonical <
             pool[static_cast<std::size_t>(b)].canonical;
    });

    StructuredArgument arg;
    arg.kind = rule.kind;
    arg.top_rule = rule.id;
    arg.conclusion = rule.conclusion;
    std::ostringstream canonical;
    canonical << rule.id << "(";
    for (std::size_t i = 0; i < order.size(); ++i) {
      if (i > 0) canonical << ",";
      canonical << pool[static_cast<std::size_t>(order[i])].canonical;
    }
    canonical << ")";
    arg.canonical = canonical.str();
    if (by_canonical.count(arg.canonical)) return;

    arg.children = order;
    arg.literals = std::move(literals);
    for (int c : order) {
      const auto& child = pool[static_cast<std::size_t>(c)];
      arg.uses_norms.insert(child.uses_norms.begin(), child.uses_norms.end());
      arg.uses_beliefs.insert(child.uses_beliefs.begin(), child.uses_beliefs.end());
      arg.uses_standpoints.insert(child.uses_standpoints.begin(),
                                  child.uses_standpoints.end());
      arg.uses_assumptions.insert(child.uses_assumptions.begin(),
                                  child.uses_assumptions.end());
      arg.premises.insert(child.premises.begin(), child.premises.end());
    }
    switch (rule.kind) {
      case StructuredArgument::Kind::NormStep: arg.uses_norms.insert(rule.id); break;
      case StructuredArgument::Kind::BeliefStep: arg.uses_beliefs.insert(rule.id); break;
      case StructuredArgument::Kind::StandpointStep:
        arg.uses_standpoints.insert(rule.id);
        break;
      default: throw Error("rule application with a leaf kind");
    }
    add(std::move(arg));
  }

  /// All ways of picking one concluder per antecedent, over the current pool.
  void combinations(const Rule& rule, std::size_t next, std::vector<int>& picked) {
    if (next == rule.antecedents.size()) {
      apply(rule, picked);
      return;
    }
    const Literal& wanted = rule.antecedents[next];
    const int snapshot = static_cast<int>(pool.size());
    for (int c = 0; c < snapshot; ++c) {
      const auto& candidate = pool[static_cast<std::size_t>(c)];
      if (candidate.conclusion.kind == Conclusion::Kind::Literal &&
          candidate.conclusion.literal == wanted) {
        picked.push_back(c);
        combinations(rule, next + 1, picked);
        picked.pop_back();
      }
    }
  }

  void saturate() {
    std::size_t before = 0;
    while (before != pool.size()) {
      before = pool.size();
      for (const auto& rule : rules) {
        std::vector<int> picked;
        combinations(rule, 0, picked);
      }
    }
  }

  void finish() {
    // Content-sorted pool: equal scenarios yield identical pools no matter
    // what order saturation discovered the arguments in.
    std::vector<int> order(pool.size());
    for (std::size_t i = 0; i < pool.size(); ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      return pool[static_cast<std::size_t>(a)].canonical <
             pool[static_cast<std::size_t>(b)].canonical;
    });
    std::vector<int> position(pool.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
      position[static_cast<std::size_t>(order[i])] = static_cast<int>(i);
    }
    std::vector<StructuredArgument> sorted;
    sorted.reserve(pool.size());
    for (int old : order) sorted.push_back(std::move(pool[static_cast<std::size_t>(old)]));
    for (auto& arg : sorted) {
      for (int& c : arg.children) c = position[static_cast<std::size_t>(c)];
      std::sort(arg.children.begin(), arg.children.end());
    }
    pool = std::move(sorted);

    for (std::size_t i = 0; i < pool.size(); ++i) {
      std::set<int> subs;
      std::function<void(int)> walk = [&](int a) {
        if (!subs.insert(a).second) return;
        for (int c : pool[static_cast<std::size_t>(a)].children) walk(c);
      };
      walk(static_cast<int>(i));
      pool[i].subs.assign(subs.begin(), subs.end());
    }

    std::set<ArgumentId> ids;
    for (auto& arg : pool) {
      arg.id = "arg_" + fnv1a_hex(arg.canonical);
      if (!ids.insert(arg.id).second) {
        throw Error("argument id collision on '" + arg.canonical + "'");
      }
    }
    apply_aliases(ids);
  }

  /// Canonical form of an alias sketch; leaves match the observation or
  /// assumption argument concluding the literal.
  std::string sketch_canonical(const DerivationSketch& sketch) {
    if (sketch.leaf) {
      if (by_canonical.count(sketch.literal.str())) return sketch.literal.str();
      const std::string assumed = "assume(" + sketch.literal.str() + ")";
      if (by_canonical.count(assumed)) return assumed;
      throw CompileError("alias leaf '" + sketch.literal.str() +
                         "' matches no observation or assumption");
    }
    std::vector<std::string> parts;
    for (const auto& child : sketch.children) parts.push_back(sketch_canonical(child));
    std::sort(parts.begin(), parts.end());
    std::ostringstream out;
    out << sketch.rule_id << "(";
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (i > 0) out << ",";
      out << parts[i];
    }
    out << ")";
    return out.str();
  }

  void apply_aliases(std::set<ArgumentId>& ids) {
    by_canonical.clear();
    for (std::size_t i = 0; i < pool.size(); ++i) {
      by_canonical[pool[i].canonical] = static_cast<int>(i);
    }
    for (const auto& alias : scenario.aliases) {
      const std::string canonical = sketch_canonical(alias.sketch);
      const auto it = by_canonical.find(canonical);
      if (it == by_canonical.end()) {
        throw CompileError("alias '" + alias.name + "' = " + alias.sketch.str() +
                           " matches no constructed argument");
      }
      auto& arg = pool[static_cast<std::size_t>(it->second)];
      if (!arg.id.starts_with("arg_")) {
        throw CompileError("aliases '" + arg.id + "' and '" + alias.name +
                           "' name the same argument");
      }
      if (!ids.insert(alias.name).second) {
        throw CompileError("alias '" + alias.name + "' collides with another argument id");
      }
      ids.erase(arg.id);
      arg.id = alias.name;
    }
  }
};

}  // namespace

std::vector<StructuredArgument> construct_arguments(const Scenario& scenario,
                                                    const CompileOptions& options) {
  Builder b(scenario, options);
  b.validate();
  b.collect_rules();
  b.seed();
  b.saturate();
  b.finish();
  return std::move(b.pool);
}

std::vector<AttackPair> compute_attacks(const std::vector<StructuredArgument>& pool) {
  std::set<AttackPair> attacks;
  for (const auto& source : pool) {
    for (const auto& target : pool) {
      if (source.id == target.id) continue;
      if (source.practical() && !target.practical()) continue;
      bool hits = false;
      if (source.conclusion.kind == Conclusion::Kind::Literal) {
        const Literal complement = source.conclusion.literal.complement();
        // Rebut: the complement concluded anywhere inside the target except
        // at an observation, which is beyond dispute.
        for (int s : target.subs) {
          const auto& sub = pool[static_cast<std::size_t>(s)];
          if (sub.kind != StructuredArgument::Kind::Observation &&
              sub.conclusion.kind == Conclusion::Kind::Literal &&
              sub.conclusion.literal == complement) {
            hits = true;
            break;
          }
        }
        // Undermine: the target rests on the complementary assumption.
        if (!hits && target.uses_assumptions.count(complement)) hits = true;
      } else {
        // Undercut: the target applies the norm claimed inapplicable.
        if (target.uses_norms.count(source.conclusion.rule_id)) hits = true;
      }
      if (hits) attacks.insert({source.id, target.id});
    }
  }
  return {attacks.begin(), attacks.end()};
}

const StructuredArgument* Compiled::find(const ArgumentId& id) const {
  const auto it = by_id.find(id);
  return it == by_id.end() ? nullptr : &arguments[static_cast<std::size_t>(it->second)];
}

Compiled compile(const Scenario& scenario, const CompileOptions& options) {
  Compiled out;
  out.kind = ScenarioKind::Structured;
  out.scenario = scenario;
  out.arguments = construct_arguments(scenario, options);
  const auto attacks = compute_attacks(out.arguments);

  std::map<std::string, const Norm*> norms;
  for (const auto& n : scenario.norms) norms[n.id] = &n;
  std::map<std::string, const Standpoint*> standpoints;
  for (const auto& s : scenario.standpoints) standpoints[s.id] = &s;

  std::set<ArgumentId> ids;
  std::set<ArgumentId> practical;
  std::map<ArgumentId, std::set<ValueId>> val;
  std::map<ArgumentId, std::set<AgentId>> pi;
  for (const auto& arg : out.arguments) {
    ids.insert(arg.id);
    std::set<AgentId> holders;
    for (const auto& norm_id : arg.uses_norms) holders.insert(norms.at(norm_id)->stakeholder);
    for (const auto& sp_id : arg.uses_standpoints) {
      holders.insert(standpoints.at(sp_id)->stakeholder);
    }
    pi[arg.id] = std::move(holders);
    if (arg.practical()) {
      practical.insert(arg.id);
      std::set<ValueId> promoted;
      for (const auto& norm_id : arg.uses_norms) {
        const auto& values = norms.at(norm_id)->values;
        promoted.insert(values.begin(), values.end());
      }
      val[arg.id] = std::move(promoted);
    }
  }

  out.vf = make_value_framework(
      Framework(ids, std::set<AttackPair>(attacks.begin(), attacks.end())),
      std::move(practical),
      std::set<AgentId>(scenario.stakeholders.begin(), scenario.stakeholders.end()),
      scenario.value_order(), std::move(val), std::move(pi));
  for (std::size_t i = 0; i < out.arguments.size(); ++i) {
    out.by_id[out.arguments[i].id] = static_cast<int>(i);
  }
  return out;
}

Compiled realize(const Scenario& scenario, const CompileOptions& options) {
  if (scenario.kind == ScenarioKind::Structured) return compile(scenario, options);
  Compiled out;
  out.kind = ScenarioKind::Abstract;
  out.scenario = scenario;
  out.vf = abstract_value_framework(scenario);
  return out;
}

}  // namespace concord
