// Copyright 2026 The Concord Authors
// Licensed under the Apache License, Version 2.0 (https://www.apache.org/licenses/LICENSE-2.0)

#include <doctest.h>

#include <fstream>
#include <random>
#include <sstream>
#include <string>

#include "concord/parser.hpp"
#include "support/generators.hpp"

using namespace concord;

namespace {

std::string scenario_path(const std::string& name) {
  return std::string(CONCORD_SCENARIO_DIR) + "/" + name;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

/// Runs f, which must throw ParseError, and hands the error back.
template <typename F>
ParseError capture(F&& f) {
  try {
    f();
  } catch (const ParseError& e) {
    return e;
  }
  FAIL("expected a ParseError");
  throw std::logic_error("unreachable");
}

ParseError parse_error(const std::string& source) {
  return capture([&] { (void)parse_scenario(source); });
}

}  // namespace

TEST_CASE("bundled abstract scenario parses to the stated graph") {
  const Scenario s = load_scenario_file(scenario_path("smart_home_abstract.scn"));

  CHECK(s.name == "smart_home_abstract");
  CHECK(s.kind == ScenarioKind::Abstract);
  CHECK(s.stakeholders ==
        std::vector<AgentId>{"Parents", "Manufacturer", "Law", "Child"});
  CHECK(s.values.size() == 6);
  CHECK(s.values.front() == "Legality");

  // The chain order line decomposes into adjacent pairs.
  REQUIRE(s.order_pairs.size() == 5);
  CHECK(std::count(s.order_pairs.begin(), s.order_pairs.end(),
                   std::pair<ValueId, ValueId>{"Legality", "Responsibility"}) == 1);
  CHECK(std::count(s.order_pairs.begin(), s.order_pairs.end(),
                   std::pair<ValueId, ValueId>{"Good_To_Consumers", "Healthy"}) == 1);

  REQUIRE(s.arguments.size() == 5);
  const auto& a = s.arguments[0];
  CHECK(a.id == "A");
  CHECK(a.practical);
  CHECK(a.values == std::vector<ValueId>{"Autonomy", "Healthy", "Responsibility"});
  CHECK(a.agents == std::vector<AgentId>{"Parents"});
  const auto& d = s.arguments[3];
  CHECK(d.id == "D");
  CHECK_FALSE(d.practical);
  CHECK(d.values.empty());
  CHECK(d.agents == std::vector<AgentId>{"Child"});
  const auto& e = s.arguments[4];
  CHECK(e.id == "E");
  CHECK_FALSE(e.practical);
  CHECK(e.agents.empty());

  CHECK(s.attacks == std::vector<AttackPair>{{"A", "B"},
                                             {"B", "A"},
                                             {"B", "C"},
                                             {"C", "B"},
                                             {"D", "B"},
                                             {"E", "D"}});

  CHECK(s.observations.empty());
  CHECK(s.norms.empty());
}

TEST_CASE("bundled structured scenario parses to the stated normative base") {
  const Scenario s = load_scenario_file(scenario_path("smart_home_structured.scn"));

  CHECK(s.name == "smart_home_structured");
  CHECK(s.kind == ScenarioKind::Structured);
  CHECK(s.stakeholders.size() == 4);
  CHECK(s.values.size() == 6);
  CHECK(s.order_pairs.size() == 5);

  REQUIRE(s.observations.size() == 2);
  CHECK(s.observations[0].literal == Literal{"child_smokes_marijuana", false});
  CHECK(s.observations[1].literal == Literal{"recreation_observed", false});
  REQUIRE(s.assumptions.size() == 1);
  CHECK(s.assumptions[0].literal == Literal{"medical_purpose", false});

  REQUIRE(s.beliefs.size() == 1);
  CHECK(s.beliefs[0].id == "b1");
  CHECK(s.beliefs[0].antecedents ==
        std::vector<Literal>{Literal{"recreation_observed", false}});
  CHECK(s.beliefs[0].consequent == Literal{"medical_purpose", true});

  REQUIRE(s.norms.size() == 8);
  const auto norm = [&](const std::string& id) {
    for (const auto& n : s.norms) {
      if (n.id == id) return n;
    }
    FAIL("missing norm ", id);
    throw std::logic_error("unreachable");
  };
  const Norm n3 = norm("n3");
  CHECK(n3.stakeholder == "Parents");
  CHECK(n3.values == std::vector<ValueId>{"Autonomy"});
  // Antecedents are stored sorted regardless of source order.
  CHECK(n3.antecedents == std::vector<Literal>{Literal{"alert_parents", false},
                                               Literal{"bad_behavior", false}});
  CHECK(n3.consequent == Literal{"alert_police", true});
  const Norm n4 = norm("n4");
  CHECK(n4.antecedents.empty());
  const Norm n7 = norm("n7");
  CHECK(n7.values == std::vector<ValueId>{"Healthy", "Legality"});

  REQUIRE(s.standpoints.size() == 1);
  CHECK(s.standpoints[0].id == "a1");
  CHECK(s.standpoints[0].stakeholder == "Child");
  CHECK(s.standpoints[0].target_norm == "n7");
  CHECK(s.standpoints[0].antecedents ==
        std::vector<Literal>{Literal{"medical_purpose", false}});

  REQUIRE(s.aliases.size() == 13);
  CHECK(s.aliases[0].name == "O1");
  CHECK(s.aliases[0].sketch.leaf);
  CHECK(s.aliases[0].sketch.literal == Literal{"child_smokes_marijuana", false});

  // Alias references inside sketches expand structurally at parse time.
  const auto alias = [&](const std::string& name) {
    for (const auto& al : s.aliases) {
      if (al.name == name) return al.sketch;
    }
    FAIL("missing alias ", name);
    throw std::logic_error("unreachable");
  };
  const DerivationSketch a_sk = alias("A");
  REQUIRE_FALSE(a_sk.leaf);
  CHECK(a_sk.rule_id == "n3");
  REQUIRE(a_sk.children.size() == 2);
  CHECK(a_sk.children[0].rule_id == "n1");
  REQUIRE(a_sk.children[0].children.size() == 1);
  CHECK(a_sk.children[0].children[0].literal ==
        Literal{"child_smokes_marijuana", false});
  CHECK(a_sk.children[1].rule_id == "n2");
  CHECK(a_sk.str() == "n3(n1(child_smokes_marijuana), n2(n1(child_smokes_marijuana)))");
  const DerivationSketch c1_sk = alias("C1");
  CHECK(c1_sk.str() == "n4()");
}

TEST_CASE("reference errors carry the offending token position") {
  SUBCASE("undeclared stakeholder in a norm") {
    const ParseError e = parse_error(
        "scenario t\n"
        "kind structured\n"
        "stakeholders Bob\n"
        "values Health\n"
        "norm n1 by Ghost values Health: p => q\n");
    CHECK(e.line() == 5);
    CHECK(e.column() == 12);
    CHECK(e.message() == "undeclared stakeholder 'Ghost'");
  }
  SUBCASE("undeclared value in the order") {
    const ParseError e = parse_error(
        "scenario t\n"
        "kind abstract\n"
        "values V1\n"
        "order V1 >= V9\n");
    CHECK(e.line() == 4);
    CHECK(e.column() == 13);
    CHECK(e.message() == "undeclared value 'V9'");
  }
  SUBCASE("unknown attack endpoint") {
    const ParseError e = parse_error(
        "scenario t\n"
        "kind abstract\n"
        "argument A epistemic\n"
        "attack A -> Z\n");
    CHECK(e.line() == 4);
    CHECK(e.column() == 13);
    CHECK(e.message() == "undeclared argument 'Z'");
  }
  SUBCASE("undeclared rule in an alias sketch") {
    const ParseError e = parse_error(
        "scenario t\n"
        "kind structured\n"
        "fact p\n"
        "alias X = n9(p)\n");
    CHECK(e.line() == 4);
    CHECK(e.column() == 11);
    CHECK(e.message() == "undeclared rule 'n9'");
  }
  SUBCASE("sketch arity mismatch") {
    const ParseError e = parse_error(
        "scenario t\n"
        "kind structured\n"
        "stakeholders S\n"
        "values V\n"
        "fact p\n"
        "norm n1 by S values V: p => q\n"
        "alias X = n1()\n");
    CHECK(e.line() == 7);
    CHECK(e.message() == "rule 'n1' takes 1 antecedent(s), sketch 'n1()' gives 0");
  }
  SUBCASE("undeclared standpoint target") {
    const ParseError e = parse_error(
        "scenario t\n"
        "kind structured\n"
        "stakeholders S\n"
        "standpoint a1 by S: p undercuts n9\n");
    CHECK(e.line() == 4);
    CHECK(e.message() == "undeclared norm 'n9'");
  }
}

TEST_CASE("grammar errors point at the first offending token") {
  SUBCASE("unknown statement keyword") {
    const ParseError e = parse_error(
        "scenario t\n"
        "kind abstract\n"
        "frobnicate x\n");
    CHECK(e.line() == 3);
    CHECK(e.column() == 1);
    CHECK(e.message() == "unknown statement 'frobnicate'");
    CHECK(e.expected().size() == 14);
  }
  SUBCASE("stray character") {
    const ParseError e = parse_error(
        "scenario t\n"
        "kind abstract\n"
        "argument A practical ?\n");
    CHECK(e.line() == 3);
    CHECK(e.column() == 22);
    CHECK(e.message() == "unexpected character '?'");
  }
  SUBCASE("control byte") {
    const ParseError e = parse_error("fact \x01\n");
    CHECK(e.line() == 1);
    CHECK(e.column() == 6);
    CHECK(e.message() == "unexpected byte 0x1");
  }
  SUBCASE("missing arrow in an attack") {
    const ParseError e = parse_error(
        "scenario t\n"
        "kind abstract\n"
        "argument A epistemic\n"
        "attack A A\n");
    CHECK(e.line() == 4);
    CHECK(e.column() == 10);
    CHECK(e.expected() == std::vector<std::string>{"->"});
  }
  SUBCASE("argument without a practical or epistemic tag") {
    const ParseError e = parse_error(
        "scenario t\n"
        "kind abstract\n"
        "argument A\n");
    CHECK(e.line() == 3);
    CHECK(e.message() == "expected 'practical' or 'epistemic' before end of line");
    CHECK(e.expected() == std::vector<std::string>{"practical", "epistemic"});
  }
  SUBCASE("trailing tokens are rejected") {
    const ParseError e = parse_error(
        "scenario t extra\n"
        "kind abstract\n");
    CHECK(e.line() == 1);
    CHECK(e.column() == 12);
    CHECK(e.message() == "expected end of line, found 'extra'");
  }
  SUBCASE("unsupported version") {
    const ParseError e = parse_error("version 2\n");
    CHECK(e.line() == 1);
    CHECK(e.column() == 9);
    CHECK(e.message() == "unsupported version '2' (expected 1)");
  }
  SUBCASE("unknown kind") {
    const ParseError e = parse_error(
        "scenario t\n"
        "kind weird\n");
    CHECK(e.line() == 2);
    CHECK(e.column() == 6);
    CHECK(e.expected() == std::vector<std::string>{"abstract", "structured"});
  }
}

TEST_CASE("header statements are mandatory and unique") {
  CHECK(parse_error("").message() == "missing 'scenario <name>' statement");
  CHECK(parse_error("# only a comment\n").line() == 1);
  CHECK(parse_error("scenario t\n").message() ==
        "missing 'kind abstract|structured' statement");
  CHECK(parse_error("scenario a\nscenario b\nkind abstract\n").message() ==
        "duplicate scenario statement");
  CHECK(parse_error("version 1\nversion 1\nscenario t\nkind abstract\n").message() ==
        "duplicate version statement");
  CHECK(parse_error("scenario t\nkind abstract\nkind abstract\n").message() ==
        "duplicate kind statement");
  CHECK(parse_error("scenario t\nkind abstract\nvalues V\nvalues W\n").message() ==
        "duplicate values statement");

  // The version statement itself is optional on input.
  const Scenario s = parse_scenario("scenario t\nkind abstract\n");
  CHECK(s.name == "t");
  CHECK(s.arguments.empty());
}

TEST_CASE("statements are restricted to their scenario kind") {
  const ParseError a = parse_error(
      "scenario t\n"
      "kind structured\n"
      "argument A epistemic\n");
  CHECK(a.line() == 3);
  CHECK(a.message() == "argument/attack statements require kind abstract");

  const ParseError b = parse_error(
      "scenario t\n"
      "kind abstract\n"
      "fact p\n");
  CHECK(b.line() == 3);
  CHECK(b.column() == 6);
  CHECK(b.message() == "norm/belief/fact/assumption/alias statements require kind structured");
}

TEST_CASE("duplicate and contradictory declarations are rejected") {
  CHECK(parse_error("scenario t\nkind abstract\nstakeholders Bob Bob\n").message() ==
        "duplicate stakeholder 'Bob'");
  CHECK(parse_error("scenario t\nkind abstract\nvalues V V\n").message() ==
        "duplicate value 'V'");
  CHECK(parse_error("scenario t\nkind structured\nfact p\nfact p\n").message() ==
        "duplicate fact 'p'");
  CHECK(parse_error("scenario t\nkind structured\nfact p\nfact ~p\n").message() ==
        "fact '~p' contradicts an earlier fact");
  CHECK(parse_error("scenario t\nkind structured\nfact p\nassumption p\n").message() ==
        "assumption 'p' duplicates a fact");
  CHECK(parse_error("scenario t\nkind structured\nassumption p\nassumption p\n")
            .message() == "duplicate assumption 'p'");
  CHECK(parse_error("scenario t\nkind structured\nstakeholders S\nvalues V\n"
                    "norm n1 by S values V: p => q\nnorm n1 by S values V: q => r\n")
            .message() == "duplicate rule id 'n1'");
  CHECK(parse_error("scenario t\nkind structured\nstakeholders S\nvalues V\n"
                    "norm n1 by S values V: p => p\n")
            .message() == "norm 'n1' concludes one of its own antecedents");
  CHECK(parse_error("scenario t\nkind structured\nfact p\nalias X = p\nalias X = p\n")
            .message() == "duplicate alias 'X'");
  CHECK(parse_error("scenario t\nkind abstract\nargument A epistemic\n"
                    "argument A epistemic\n")
            .message() == "duplicate argument 'A'");
  CHECK(parse_error("scenario t\nkind abstract\nargument A epistemic\n"
                    "attack A -> A\nattack A -> A\n")
            .message() == "duplicate attack A -> A");
}

TEST_CASE("attack direction and value placement rules hold at parse time") {
  const ParseError dir = parse_error(
      "scenario t\n"
      "kind abstract\n"
      "argument A practical\n"
      "argument B epistemic\n"
      "attack A -> B\n");
  CHECK(dir.line() == 5);
  CHECK(dir.column() == 8);
  CHECK(dir.message() ==
        "attack A -> B runs from a practical argument to an epistemic one");

  // The converse direction is the allowed one.
  const Scenario ok = parse_scenario(
      "scenario t\n"
      "kind abstract\n"
      "argument A practical\n"
      "argument B epistemic\n"
      "attack B -> A\n");
  CHECK(ok.attacks == std::vector<AttackPair>{{"B", "A"}});

  const ParseError values = parse_error(
      "scenario t\n"
      "kind abstract\n"
      "values V1\n"
      "argument A epistemic values V1\n");
  CHECK(values.line() == 4);
  CHECK(values.column() == 29);
  CHECK(values.message() == "epistemic argument 'A' carries values");
}

TEST_CASE("comments, blank lines and CRLF endings are tolerated") {
  const Scenario s = parse_scenario(
      "# leading comment\r\n"
      "\r\n"
      "scenario t   # trailing comment\r\n"
      "kind abstract\r\n"
      "argument A epistemic\r\n");
  CHECK(s.name == "t");
  REQUIRE(s.arguments.size() == 1);
  CHECK(s.arguments[0].id == "A");
}

TEST_CASE("unreadable files raise an I/O error") {
  CHECK_THROWS_AS((void)load_scenario_file("/nonexistent/missing.scn"), IoError);
}

TEST_CASE("serialisation round-trips the bundled scenarios") {
  for (const char* name : {"smart_home_abstract.scn", "smart_home_structured.scn"}) {
    CAPTURE(name);
    const Scenario first = parse_scenario(read_file(scenario_path(name)));
    const std::string text = serialize_scenario(first);
    const Scenario second = parse_scenario(text);
    CHECK(first == second);
    // Canonical form is a fixpoint.
    CHECK(serialize_scenario(second) == text);
  }
}

TEST_CASE("serialisation round-trips generated scenarios") {
  std::mt19937 rng(20260814u);
  for (int round = 0; round < 300; ++round) {
    CAPTURE(round);
    const Scenario original = fixtures::random_scenario(rng);
    const std::string text = serialize_scenario(original);
    CAPTURE(text);
    const Scenario reparsed = parse_scenario(text);
    REQUIRE(reparsed == original);
    REQUIRE(serialize_scenario(reparsed) == text);
  }
}

TEST_CASE("arbitrary bytes never crash the parser") {
  const std::string seed_a = read_file(scenario_path("smart_home_abstract.scn"));
  const std::string seed_b = read_file(scenario_path("smart_home_structured.scn"));
  std::mt19937 rng(97531u);
  int parsed = 0;
  int rejected = 0;
  for (int round = 0; round < 5000; ++round) {
    const std::string input =
        fixtures::fuzz_input(rng, (round % 2 == 0) ? seed_a : seed_b);
    try {
      (void)parse_scenario(input);
      ++parsed;
    } catch (const ParseError& e) {
      CHECK(e.line() >= 1);
      CHECK(e.column() >= 1);
      CHECK_FALSE(e.message().empty());
      ++rejected;
    }
    // Anything else (segfault, bad_alloc, unexpected type) fails the test.
  }
  CHECK(parsed + rejected == 5000);
  CHECK(rejected > 0);
}
