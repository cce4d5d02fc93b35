// Copyright 2026 The Concord Authors
// Licensed under the Apache License, Version 2.0 (https://www.apache.org/licenses/LICENSE-2.0)

#include <doctest.h>

#include <algorithm>
#include <string>

#include "concord/compiler.hpp"
#include "concord/parser.hpp"
#include "support/fixtures.hpp"
#include "support/generators.hpp"

using namespace concord;

namespace {

Scenario bundled(const std::string& name) {
  return load_scenario_file(std::string(CONCORD_SCENARIO_DIR) + "/" + name);
}

Compiled compile_text(const std::string& source) {
  return compile(parse_scenario(source));
}

const StructuredArgument& arg(const Compiled& c, const ArgumentId& id) {
  const StructuredArgument* found = c.find(id);
  REQUIRE_MESSAGE(found != nullptr, "missing argument ", id);
  return *found;
}

}  // namespace

TEST_CASE("compiling the bundled scenario reproduces the stated graph") {
  const Compiled c = compile(bundled("smart_home_structured.scn"));

  // Thirteen arguments: five aliased top arguments plus their material.
  REQUIRE(c.arguments.size() == 13);
  for (const char* id :
       {"O1", "O2", "S1", "A1", "A2", "A", "B1", "B", "C1", "C2", "C", "D", "E"}) {
    CHECK(c.find(id) != nullptr);
  }

  CHECK(arg(c, "O1").conclusion == Conclusion::of({"child_smokes_marijuana", false}));
  CHECK(arg(c, "O1").kind == StructuredArgument::Kind::Observation);
  CHECK(arg(c, "S1").kind == StructuredArgument::Kind::Assumption);
  CHECK(arg(c, "S1").canonical == "assume(medical_purpose)");

  CHECK(arg(c, "A").conclusion == Conclusion::of({"alert_police", true}));
  CHECK(arg(c, "A").top_rule == "n3");
  CHECK(arg(c, "A").canonical ==
        "n3(n1(child_smokes_marijuana),n2(n1(child_smokes_marijuana)))");
  CHECK(arg(c, "A").uses_norms == std::set<std::string>{"n1", "n2", "n3"});
  CHECK(arg(c, "A").premises == std::set<Literal>{{"child_smokes_marijuana", false}});
  CHECK(arg(c, "A").subs.size() == 4);

  CHECK(arg(c, "B").conclusion == Conclusion::of({"alert_police", false}));
  CHECK(arg(c, "B").uses_norms == std::set<std::string>{"n7", "n8"});
  CHECK(arg(c, "C").conclusion == Conclusion::of({"alert_police", true}));
  CHECK(arg(c, "C1").conclusion == Conclusion::of({"good_to_consumers", false}));
  CHECK(arg(c, "C1").premises.empty());

  // The standpoint argument concludes inapplicability, not a literal.
  CHECK(arg(c, "D").conclusion == Conclusion::inapplicable("n7"));
  CHECK(arg(c, "D").kind == StructuredArgument::Kind::StandpointStep);
  CHECK(arg(c, "D").uses_standpoints == std::set<std::string>{"a1"});
  CHECK(arg(c, "D").uses_assumptions == std::set<Literal>{{"medical_purpose", false}});
  CHECK_FALSE(arg(c, "D").practical());

  CHECK(arg(c, "E").conclusion == Conclusion::of({"medical_purpose", true}));
  CHECK(arg(c, "E").kind == StructuredArgument::Kind::BeliefStep);
  CHECK(arg(c, "E").uses_beliefs == std::set<std::string>{"b1"});
  CHECK_FALSE(arg(c, "E").practical());

  // Practical = built with at least one norm.
  CHECK(c.vf.practical ==
        std::set<ArgumentId>{"A", "A1", "A2", "B", "B1", "C", "C1", "C2"});
  CHECK(c.vf.epistemic == std::set<ArgumentId>{"D", "E", "O1", "O2", "S1"});
}

TEST_CASE("compiled value and stakeholder annotations are the norm unions") {
  const Compiled c = compile(bundled("smart_home_structured.scn"));

  const std::map<ArgumentId, std::set<ValueId>> val{
      {"A", {"Autonomy", "Healthy", "Responsibility"}},
      {"A1", {"Healthy"}},
      {"A2", {"Healthy", "Responsibility"}},
      {"B", {"Healthy", "Legality"}},
      {"B1", {"Healthy", "Legality"}},
      {"C", {"Good_To_Consumers", "Protect_Privacy"}},
      {"C1", {"Good_To_Consumers"}},
      {"C2", {"Legality"}},
  };
  CHECK(c.vf.val == val);

  CHECK(c.vf.pi.at("A") == std::set<AgentId>{"Parents"});
  CHECK(c.vf.pi.at("B") == std::set<AgentId>{"Law"});
  CHECK(c.vf.pi.at("C") == std::set<AgentId>{"Manufacturer"});
  CHECK(c.vf.pi.at("D") == std::set<AgentId>{"Child"});
  CHECK(c.vf.pi.at("E").empty());
  CHECK(c.vf.pi.at("O1").empty());
  CHECK(c.vf.pi.at("S1").empty());
  CHECK(c.vf.agents ==
        std::set<AgentId>{"Parents", "Manufacturer", "Law", "Child"});
}

TEST_CASE("compiled attacks are exactly rebut, undercut and undermine") {
  const Compiled c = compile(bundled("smart_home_structured.scn"));

  const std::vector<AttackPair> expected{
      {"A", "B"},   // rebut on alert_police
      {"B", "A"},
      {"B", "C"},
      {"C", "B"},
      {"D", "B"},   // undercut of n7, inherited by the n8 step
      {"D", "B1"},
      {"E", "D"},   // undermines medical_purpose
      {"E", "S1"},
      {"S1", "E"},  // rebuts the belief conclusion
  };
  CHECK(c.vf.framework.attacks() == expected);

  // Observation arguments are never attacked.
  for (const auto& [from, to] : c.vf.framework.attacks()) {
    (void)from;
    CHECK(to != "O1");
    CHECK(to != "O2");
  }

  // Restricted to the five named top arguments this is the bundled
  // abstract graph.
  const Scenario abstract = bundled("smart_home_abstract.scn");
  const std::set<ArgumentId> top{"A", "B", "C", "D", "E"};
  std::vector<AttackPair> projected;
  for (const auto& at : c.vf.framework.attacks()) {
    if (top.count(at.first) && top.count(at.second)) projected.push_back(at);
  }
  CHECK(projected == abstract.attacks);

  // The framework is rebuilt from the pool and the attack list alone.
  std::set<ArgumentId> ids;
  for (const auto& a : c.arguments) ids.insert(a.id);
  const auto raw = compute_attacks(c.arguments);
  CHECK(c.vf.framework == Framework(ids, {raw.begin(), raw.end()}));
}

TEST_CASE("realize loads abstract scenarios directly") {
  const Compiled c = realize(bundled("smart_home_abstract.scn"));
  CHECK_FALSE(c.structured());
  CHECK(c.arguments.empty());
  CHECK(c.vf.framework == fixtures::smart_home());
  CHECK(c.vf.practical == std::set<ArgumentId>{"A", "B", "C"});
  CHECK(c.vf.val.at("B") == std::set<ValueId>{"Healthy", "Legality"});
  CHECK(c.vf.pi.at("D") == std::set<AgentId>{"Child"});

  const Compiled s = realize(bundled("smart_home_structured.scn"));
  CHECK(s.structured());
  CHECK(s.arguments.size() == 13);
}

TEST_CASE("a lone observation yields one unattacked argument") {
  const Compiled c = compile_text(
      "scenario t\n"
      "kind structured\n"
      "fact p\n");
  REQUIRE(c.arguments.size() == 1);
  const auto& only = c.arguments[0];
  CHECK(only.canonical == "p");
  CHECK(only.id.rfind("arg_", 0) == 0);
  CHECK(only.id.size() == 20);
  CHECK(c.vf.framework.attacks().empty());
  CHECK(c.vf.practical.empty());
}

TEST_CASE("complementary conclusions rebut each other") {
  const Compiled c = compile_text(
      "scenario t\n"
      "kind structured\n"
      "assumption p\n"
      "assumption q\n"
      "belief b1: p => ~q\n"
      "belief b2: q => ~p\n"
      "alias P = p\n"
      "alias Q = q\n"
      "alias NQ = b1(P)\n"
      "alias NP = b2(Q)\n");
  REQUIRE(c.arguments.size() == 4);
  const std::vector<AttackPair> expected{
      {"NP", "NQ"}, {"NP", "P"}, {"NQ", "NP"}, {"NQ", "Q"}, {"P", "NP"}, {"Q", "NQ"},
  };
  CHECK(c.vf.framework.attacks() == expected);
  // Everything here is epistemic, so no direction filtering applies.
  CHECK(c.vf.practical.empty());
}

TEST_CASE("practical arguments never attack epistemic ones") {
  // The norm conclusion ~p would rebut the assumption argument for p, but
  // the direction rule drops that edge, while the epistemic attack on the
  // norm argument stays.
  const Compiled c = compile_text(
      "scenario t\n"
      "kind structured\n"
      "stakeholders S\n"
      "values V\n"
      "fact q\n"
      "assumption p\n"
      "norm n1 by S values V: q => ~p\n"
      "alias P = p\n"
      "alias NP = n1(q)\n");
  REQUIRE(c.arguments.size() == 3);
  CHECK(c.vf.practical == std::set<ArgumentId>{"NP"});
  CHECK(c.vf.framework.attacks() == std::vector<AttackPair>{{"P", "NP"}});
}

TEST_CASE("a rule application adding no new literal is skipped") {
  const Compiled c = compile_text(
      "scenario t\n"
      "kind structured\n"
      "stakeholders S\n"
      "values V\n"
      "fact p\n"
      "norm r1 by S values V: p => q\n"
      "norm r2 by S values V: q => p\n");
  // r2 over the r1 argument would re-conclude p, which that derivation
  // already contains; saturation stops at two arguments.
  REQUIRE(c.arguments.size() == 2);
  std::vector<std::string> canonicals;
  for (const auto& a : c.arguments) canonicals.push_back(a.canonical);
  CHECK(canonicals == std::vector<std::string>{"p", "r1(p)"});
}

TEST_CASE("inconsistent derivations are never built") {
  const Compiled c = compile_text(
      "scenario t\n"
      "kind structured\n"
      "stakeholders S\n"
      "values V\n"
      "fact p\n"
      "norm r1 by S values V: p => q\n"
      "norm r2 by S values V: q => ~p\n");
  // r2 over r1(p) would carry both p and ~p.
  REQUIRE(c.arguments.size() == 2);
  for (const auto& a : c.arguments) {
    for (const auto& l : a.literals) CHECK_FALSE(a.literals.count(l.complement()));
  }
}

TEST_CASE("the argument cap aborts compilation") {
  const Scenario s = bundled("smart_home_structured.scn");
  CompileOptions options;
  options.max_arguments = 3;
  CHECK_THROWS_AS((void)compile(s, options), CompileError);
  options.max_arguments = 13;
  CHECK(compile(s, options).arguments.size() == 13);
}

TEST_CASE("an argument chaining two stakeholders' norms answers to both") {
  const Compiled c = compile_text(
      "scenario t\n"
      "kind structured\n"
      "stakeholders S T\n"
      "values V W\n"
      "fact p\n"
      "norm r1 by S values V: p => q\n"
      "norm r2 by T values W: q => r\n"
      "alias Top = r2(r1(p))\n");
  CHECK(arg(c, "Top").uses_norms == std::set<std::string>{"r1", "r2"});
  CHECK(c.vf.pi.at("Top") == std::set<AgentId>{"S", "T"});
  CHECK(c.vf.val.at("Top") == std::set<ValueId>{"V", "W"});
}

TEST_CASE("aliases must match a constructed argument") {
  CHECK_THROWS_WITH_AS(
      (void)compile_text("scenario t\n"
                         "kind structured\n"
                         "stakeholders S\n"
                         "values V\n"
                         "fact p\n"
                         "norm n1 by S values V: q => r\n"
                         "alias X = n1(q)\n"),
      "alias leaf 'q' matches no observation or assumption", CompileError);

  // Well-formed leaf, but the rule instance does not arise.
  CHECK_THROWS_WITH_AS(
      (void)compile_text("scenario t\n"
                         "kind structured\n"
                         "stakeholders S\n"
                         "values V\n"
                         "fact p\n"
                         "fact q\n"
                         "norm n1 by S values V: p q => r\n"
                         "norm n2 by S values V: p => s\n"
                         "alias X = n2(q)\n"),
      "alias 'X' = n2(q) matches no constructed argument", CompileError);

  // Two names for one derivation.
  CHECK_THROWS_AS((void)compile_text("scenario t\n"
                                     "kind structured\n"
                                     "fact p\n"
                                     "alias X = p\n"
                                     "alias Y = p\n"),
                  CompileError);
}

TEST_CASE("compilation is deterministic") {
  const Scenario s = bundled("smart_home_structured.scn");
  const Compiled first = compile(s);
  const Compiled second = compile(s);
  REQUIRE(first.arguments.size() == second.arguments.size());
  for (std::size_t i = 0; i < first.arguments.size(); ++i) {
    CHECK(first.arguments[i].id == second.arguments[i].id);
    CHECK(first.arguments[i].canonical == second.arguments[i].canonical);
    CHECK(first.arguments[i].children == second.arguments[i].children);
  }
  CHECK(first.vf.framework == second.vf.framework);
  CHECK(first.vf.val == second.vf.val);

  // Ids of unaliased arguments are content hashes, stable across runs.
  Scenario bare = s;
  bare.aliases.clear();
  const Compiled c = compile(bare);
  for (const auto& a : c.arguments) {
    CHECK(a.id.rfind("arg_", 0) == 0);
  }
  CHECK(compile(bare).vf.framework == c.vf.framework);
}

TEST_CASE("generated scenarios compile within bounds or fail cleanly") {
  std::mt19937 rng(77001u);
  int compiled_count = 0;
  for (int round = 0; round < 200; ++round) {
    CAPTURE(round);
    const Scenario s = fixtures::random_scenario(rng);
    try {
      const Compiled c = realize(s);
      ++compiled_count;
      // Sanity on every result: pool ids unique, attacks inside the
      // framework, observation arguments unattacked.
      if (c.structured()) {
        std::set<ArgumentId> ids;
        for (const auto& a : c.arguments) CHECK(ids.insert(a.id).second);
        for (const auto& [from, to] : c.vf.framework.attacks()) {
          CHECK(c.find(from) != nullptr);
          CHECK(c.find(to) != nullptr);
          CHECK_FALSE(c.find(to)->is_observation());
          const bool wrong_direction =
              c.find(from)->practical() && !c.find(to)->practical();
          CHECK_FALSE(wrong_direction);
        }
      }
    } catch (const CompileError&) {
      // Acceptable: the random scenario tripped a semantic check.
    }
  }
  CHECK(compiled_count > 100);
}
