// Copyright 2026 The Concord Authors
// Licensed under the Apache License, Version 2.0 (https://www.apache.org/licenses/LICENSE-2.0)

#include "concord/explain.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace concord {

namespace {

JustificationNode build_node(const Framework& framework, const Extension& extension,
                             const ArgumentId& id, std::set<ArgumentId>& path) {
  JustificationNode node;
  node.argument = id;
  node.accepted = extension.contains(id);
  if (path.count(id)) {
    node.reference = true;
    return node;
  }
  path.insert(id);
  const auto incoming = attackers(framework, id);
  if (node.accepted) {
    for (const auto& attacker : incoming) {
      node.attackers.push_back(build_node(framework, extension, attacker, path));
    }
  } else {
    for (const auto& attacker : incoming) {
      if (extension.contains(attacker)) {  // least accepted attacker; sorted input
        node.cited.push_back(build_node(framework, extension, attacker, path));
        break;
      }
    }
  }
  path.erase(id);
  return node;
}

}  // namespace

JustificationNode justification_tree(const Framework& framework, const Extension& extension,
                                     const ArgumentId& id) {
  framework.index_of(id);
  if (!is_admissible(framework,
                     std::set<ArgumentId>(extension.members.begin(),
                                          extension.members.end()))) {
    throw DomainError("justification requires an admissible extension, got " +
                      extension.str());
  }
  std::set<ArgumentId> path;
  return build_node(framework, extension, id, path);
}

namespace {

std::string value_set_str(const std::set<ValueId>& values) {
  std::ostringstream out;
  out << "{";
  bool first = true;
  for (const auto& v : values) {
    if (!first) out << ", ";
    out << v;
    first = false;
  }
  out << "}";
  return out.str();
}

std::string join_literals(const std::vector<Literal>& literals) {
  std::ostringstream out;
  for (std::size_t i = 0; i < literals.size(); ++i) {
    if (i > 0) out << ", ";
    out << literals[i].str();
  }
  return out.str();
}

std::vector<ArgumentId> literal_candidates(const Compiled& compiled, const Literal& wanted) {
  std::vector<ArgumentId> out;
  for (const auto& arg : compiled.arguments) {
    if (arg.conclusion.kind == Conclusion::Kind::Literal &&
        arg.conclusion.literal == wanted) {
      out.push_back(arg.id);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

[[noreturn]] void fail_unknown_target(const Compiled& compiled, const ExplainTarget& target) {
  std::ostringstream msg;
  msg << "nothing concludes or is named '" << target.str() << "'; known ";
  if (compiled.structured()) {
    std::set<std::string> conclusions;
    for (const auto& arg : compiled.arguments) conclusions.insert(arg.conclusion.str());
    msg << "conclusions:";
    for (const auto& c : conclusions) msg << " " << c;
  } else {
    msg << "arguments:";
    for (const auto& id : compiled.vf.framework.arguments()) msg << " " << id;
  }
  throw DomainError(msg.str());
}

void derivability_structured(const Compiled& compiled, const ArgumentId& id,
                             std::vector<DerivabilityLine>& out) {
  const StructuredArgument* top = compiled.find(id);
  if (top == nullptr) throw Error("no provenance for argument '" + id + "'");

  std::map<std::string, const Norm*> norms;
  for (const auto& n : compiled.scenario.norms) norms[n.id] = &n;
  std::map<std::string, const Belief*> beliefs;
  for (const auto& b : compiled.scenario.beliefs) beliefs[b.id] = &b;
  std::map<std::string, const Standpoint*> standpoints;
  for (const auto& s : compiled.scenario.standpoints) standpoints[s.id] = &s;

  // Sub-arguments in pool order: leaves first is not guaranteed, so order by
  // derivation depth, which puts every premise before the step using it.
  std::vector<int> order(top->subs.begin(), top->subs.end());
  std::map<int, int> depth;
  std::function<int(int)> measure = [&](int a) {
    const auto it = depth.find(a);
    if (it != depth.end()) return it->second;
    int d = 0;
    for (int c : compiled.arguments[static_cast<std::size_t>(a)].children) {
      d = std::max(d, measure(c) + 1);
    }
    depth[a] = d;
    return d;
  };
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    if (measure(a) != measure(b)) return measure(a) < measure(b);
    return compiled.arguments[static_cast<std::size_t>(a)].canonical <
           compiled.arguments[static_cast<std::size_t>(b)].canonical;
  });

  for (int index : order) {
    const auto& arg = compiled.arguments[static_cast<std::size_t>(index)];
    DerivabilityLine line;
    std::ostringstream text;
    switch (arg.kind) {
      case StructuredArgument::Kind::Observation:
        line.kind = "observation";
        text << "observation " << arg.conclusion.literal.str();
        break;
      case StructuredArgument::Kind::Assumption:
        line.kind = "assumption";
        text << "assumption " << arg.conclusion.literal.str() << " (defeasible)";
        break;
      case StructuredArgument::Kind::NormStep: {
        line.kind = "norm";
        line.rule_id = arg.top_rule;
        const Norm* n = norms.at(arg.top_rule);
        text << "norm " << n->id << " (by " << n->stakeholder << ", promotes "
             << value_set_str(std::set<ValueId>(n->values.begin(), n->values.end()))
             << "): " << join_literals(n->antecedents) << " => " << n->consequent.str();
        break;
      }
      case StructuredArgument::Kind::BeliefStep: {
        line.kind = "belief";
        line.rule_id = arg.top_rule;
        const Belief* b = beliefs.at(arg.top_rule);
        text << "belief " << b->id << ": " << join_literals(b->antecedents) << " => "
             << b->consequent.str();
        break;
      }
      case StructuredArgument::Kind::StandpointStep: {
        line.kind = "standpoint";
        line.rule_id = arg.top_rule;
        const Standpoint* s = standpoints.at(arg.top_rule);
        text << "standpoint " << s->id << " (by " << s->stakeholder
             << "): " << join_literals(s->antecedents) << " undercuts " << s->target_norm;
        break;
      }
    }
    line.text = text.str();
    out.push_back(std::move(line));
  }
}

void derivability_abstract(const Compiled& compiled, const ArgumentId& id,
                           std::vector<DerivabilityLine>& out) {
  DerivabilityLine line;
  line.kind = "argument";
  std::ostringstream text;
  const bool practical = compiled.vf.practical.count(id) > 0;
  text << "argument " << id << " (" << (practical ? "practical" : "epistemic");
  if (practical) {
    text << ", values " << value_set_str(compiled.vf.val.at(id));
  }
  const auto& holders = compiled.vf.pi.at(id);
  if (!holders.empty()) {
    text << ", by";
    for (const auto& agent : holders) text << " " << agent;
  }
  text << "), stated directly by the scenario";
  line.text = text.str();
  out.push_back(std::move(line));
}

}  // namespace

Explanation explain_decision(const Compiled& compiled, Semantics semantics,
                             LiftingPrinciple principle, const ExplainTarget& target) {
  Explanation out;
  out.target = target;
  out.semantics = semantics;
  out.principle = principle;

  std::vector<ArgumentId> candidates;
  if (target.kind == ExplainTarget::Kind::Literal) {
    if (!compiled.structured()) {
      throw DomainError(
          "literal targets need a structured scenario; name an argument instead");
    }
    candidates = literal_candidates(compiled, target.literal);
  } else if (compiled.vf.framework.has_argument(target.argument)) {
    candidates.push_back(target.argument);
  }
  if (candidates.empty()) fail_unknown_target(compiled, target);

  const auto all = extensions(reduce(compiled.vf), semantics);
  const auto winners = maximal_agreement(compiled.vf, semantics, principle);
  out.tie = winners.size() > 1;

  out.accepted = false;
  for (const auto& winner : winners) {
    for (const auto& candidate : candidates) {
      if (winner.contains(candidate)) {
        out.chosen = winner;
        out.argument = candidate;
        out.accepted = true;
        break;
      }
    }
    if (out.accepted) break;
  }
  if (!out.accepted) {
    out.chosen = winners.front();
    out.argument = candidates.front();
  }
  out.chosen_values = extension_values(compiled.vf, out.chosen);

  for (const auto& e : all) {
    if (e == out.chosen) continue;
    ContrastEntry entry;
    entry.extension = e;
    entry.values = extension_values(compiled.vf, e);
    entry.tied = std::find(winners.begin(), winners.end(), e) != winners.end();
    out.contrast.push_back(std::move(entry));
  }

  if (compiled.structured()) {
    derivability_structured(compiled, out.argument, out.derivability);
  } else {
    derivability_abstract(compiled, out.argument, out.derivability);
  }

  out.justification = justification_tree(reduce(compiled.vf), out.chosen, out.argument);
  return out;
}

namespace {

void render_node(std::ostream& out, const JustificationNode& node, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (node.accepted) {
    out << pad << "- argument " << node.argument << " is accepted";
    if (node.reference) {
      out << " (already shown)\n";
    } else if (node.attackers.empty()) {
      out << ": it has no attackers\n";
    } else {
      out << ": all its attackers are rejected\n";
      for (const auto& child : node.attackers) render_node(out, child, indent + 2);
    }
  } else {
    if (node.reference) {
      out << pad << "- argument " << node.argument << " is rejected (already shown)\n";
    } else if (node.cited.empty()) {
      out << pad << "- argument " << node.argument
          << " is rejected: the extension does not defend it\n";
    } else {
      const auto& cited = node.cited.front();
      out << pad << "- argument " << node.argument << " is rejected because its attacker "
          << cited.argument << " is accepted";
      if (cited.reference) {
        out << " (already shown)\n";
      } else {
        out << "\n";
        if (cited.attackers.empty()) {
          out << pad << "  - argument " << cited.argument
              << " is accepted: it has no attackers\n";
        } else {
          out << pad << "  - argument " << cited.argument
              << " is accepted: all its attackers are rejected\n";
          for (const auto& child : cited.attackers) render_node(out, child, indent + 4);
        }
      }
    }
  }
}

}  // namespace

std::string render_text(const Explanation& explanation) {
  std::ostringstream out;
  out << "Decision target: " << explanation.target.str() << "\n";
  out << "Verdict: " << (explanation.accepted ? "accepted" : "rejected") << " (argument "
      << explanation.argument << ", semantics " << to_string(explanation.semantics)
      << ", principle " << to_string(explanation.principle) << ")\n";

  out << "\nDerivability\n";
  for (const auto& line : explanation.derivability) {
    out << "  " << line.text << "\n";
  }

  out << "\nAgreement reaching\n";
  out << "  Extensions under " << to_string(explanation.semantics)
      << " semantics, with their value sets:\n";
  out << "    " << explanation.chosen.str() << " values "
      << value_set_str(explanation.chosen_values) << " (chosen)\n";
  for (const auto& entry : explanation.contrast) {
    out << "    " << entry.extension.str() << " values " << value_set_str(entry.values)
        << (entry.tied ? " (tied winner)" : " (outranked)") << "\n";
  }
  if (explanation.tie) {
    out << "  Several extensions tie for the maximal extent of agreement under the "
        << to_string(explanation.principle) << " principle; " << explanation.chosen.str()
        << " is the canonical choice.\n";
  } else {
    out << "  " << explanation.chosen.str()
        << " reaches the maximal extent of agreement under the "
        << to_string(explanation.principle)
        << " principle: no other extension strictly outranks its value set.\n";
  }

  out << "\nJustification\n";
  const auto& root = explanation.justification;
  if (root.accepted) {
    out << "  Argument " << root.argument << " is accepted with respect to "
        << explanation.chosen.str();
    if (root.attackers.empty()) {
      out << ": it has no attackers\n";
    } else {
      out << ": all its attackers are rejected\n";
      for (const auto& child : root.attackers) render_node(out, child, 4);
    }
  } else {
    out << "  Argument " << root.argument << " is rejected with respect to "
        << explanation.chosen.str();
    if (root.cited.empty()) {
      out << ": the extension does not defend it\n";
    } else {
      out << "\n";
      render_node(out, root, 4);
    }
  }
  return out.str();
}

}  // namespace concord
