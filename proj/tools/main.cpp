// Copyright 2026 The Concord Authors
// Licensed under the Apache License, Version 2.0 (https://www.apache.org/licenses/LICENSE-2.0)

#include <algorithm>
#include <chrono>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "concord/compiler.hpp"
#include "concord/explain.hpp"
#include "concord/output.hpp"
#include "concord/parser.hpp"

// Exit codes: 0 success, 1 I/O failure, 2 invalid input (parse, validation,
// unknown target, cap exceeded, bad flags), 3 internal invariant violation
// (including an oracle mismatch, which means the engine itself is wrong).

namespace {

using concord::Compiled;
using nlohmann::ordered_json;

struct Options {
  std::string path;
  std::string semantics = "preferred";
  std::string principle = "democratic";
  std::string format = "text";
  std::string target;
  std::size_t oracle_cap = 16;
  bool semantics_given = false;
};

class Timer {
 public:
  double ms() const {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

ordered_json document_header(const Options& options, const concord::Scenario& scenario,
                             const char* command) {
  ordered_json doc;
  doc["scenario"] = scenario.name;
  doc["kind"] = concord::to_string(scenario.kind);
  doc["command"] = command;
  return doc;
}

void emit(const Options& options, ordered_json doc, const Timer& timer) {
  doc["timing_ms"] = timer.ms();
  if (options.format == "structured") {
    std::cout << doc.dump(2) << "\n";
  }
}

std::string extension_line(const concord::ValueFramework& vf, const concord::Extension& e) {
  std::string out = e.str() + " values {";
  bool first = true;
  for (const auto& v : concord::extension_values(vf, e)) {
    if (!first) out += ", ";
    out += v;
    first = false;
  }
  return out + "}";
}

int cmd_check(const Options& options) {
  Timer timer;
  const auto scenario = concord::load_scenario_file(options.path);
  concord::realize(scenario);  // surface compile/framework-level problems too
  ordered_json doc = document_header(options, scenario, "check");
  doc["summary"] = concord::scenario_summary_json(scenario);
  if (options.format == "text") {
    std::cout << "scenario " << scenario.name << " (" << concord::to_string(scenario.kind)
              << "): ";
    bool first = true;
    for (const auto& [key, value] : doc["summary"].items()) {
      if (!first) std::cout << ", ";
      std::cout << value.get<std::size_t>() << " " << key;
      first = false;
    }
    std::cout << "\nok\n";
  }
  emit(options, std::move(doc), timer);
  return 0;
}

int cmd_solve(const Options& options) {
  Timer timer;
  const auto scenario = concord::load_scenario_file(options.path);
  const Compiled compiled = concord::realize(scenario);
  const auto semantics = concord::semantics_from_string(options.semantics);
  const auto exts = concord::extensions(reduce(compiled.vf), semantics);

  ordered_json doc = document_header(options, scenario, "solve");
  doc["semantics"] = options.semantics;
  doc["extensions"] = ordered_json::array();
  for (const auto& e : exts) {
    doc["extensions"].push_back(concord::extension_json(compiled.vf, e));
  }
  if (options.format == "text") {
    std::cout << "scenario " << scenario.name << " (" << concord::to_string(scenario.kind)
              << ")\n";
    std::cout << options.semantics << " extensions (" << exts.size() << "):\n";
    for (const auto& e : exts) {
      std::cout << "  " << extension_line(compiled.vf, e) << "\n";
    }
  }
  emit(options, std::move(doc), timer);
  return 0;
}

int cmd_agree(const Options& options) {
  Timer timer;
  const auto scenario = concord::load_scenario_file(options.path);
  const Compiled compiled = concord::realize(scenario);
  const auto semantics = concord::semantics_from_string(options.semantics);
  const auto principle = concord::principle_from_string(options.principle);
  const auto exts = concord::extensions(reduce(compiled.vf), semantics);
  const auto winners = concord::maximal_agreement(compiled.vf, semantics, principle);
  const bool tie = winners.size() > 1;

  ordered_json doc = document_header(options, scenario, "agree");
  doc["semantics"] = options.semantics;
  doc["principle"] = options.principle;
  doc["extensions"] = ordered_json::array();
  for (const auto& e : exts) {
    doc["extensions"].push_back(concord::extension_json(compiled.vf, e));
  }
  doc["winners"] = ordered_json::array();
  for (const auto& e : winners) {
    doc["winners"].push_back(concord::extension_json(compiled.vf, e));
  }
  doc["winning"] = concord::extension_json(compiled.vf, winners.front());
  doc["tie"] = tie;
  if (options.format == "text") {
    std::cout << "scenario " << scenario.name << " (" << concord::to_string(scenario.kind)
              << ")\n";
    std::cout << options.semantics << " extensions (" << exts.size() << "):\n";
    for (const auto& e : exts) {
      std::cout << "  " << extension_line(compiled.vf, e) << "\n";
    }
    std::cout << "maximal agreement under the " << options.principle << " principle ("
              << winners.size() << (tie ? " winners, tie" : " winner") << "):\n";
    for (const auto& e : winners) {
      std::cout << "  " << extension_line(compiled.vf, e) << "\n";
    }
    std::cout << "winning: " << winners.front().str() << "\n";
  }
  emit(options, std::move(doc), timer);
  return 0;
}

int cmd_explain(const Options& options) {
  Timer timer;
  const auto scenario = concord::load_scenario_file(options.path);
  const Compiled compiled = concord::realize(scenario);
  const auto semantics = concord::semantics_from_string(options.semantics);
  const auto principle = concord::principle_from_string(options.principle);

  // Literal questions only make sense when derivations exist behind the
  // graph; abstract scenarios take argument names only.
  const concord::ExplainTarget target =
      !compiled.structured() || compiled.vf.framework.has_argument(options.target)
          ? concord::ExplainTarget::for_argument(options.target)
          : concord::ExplainTarget::for_literal(concord::literal_from_string(options.target));
  const auto explanation = concord::explain_decision(compiled, semantics, principle, target);

  ordered_json doc = document_header(options, scenario, "explain");
  doc["semantics"] = options.semantics;
  doc["principle"] = options.principle;
  doc["explanation"] = concord::explanation_json(explanation);
  if (options.format == "text") {
    std::cout << concord::render_text(explanation);
  }
  emit(options, std::move(doc), timer);
  return 0;
}

int cmd_oracle(const Options& options) {
  Timer timer;
  const auto scenario = concord::load_scenario_file(options.path);
  const Compiled compiled = concord::realize(scenario);
  std::vector<concord::Semantics> checks;
  if (options.semantics_given) {
    checks.push_back(concord::semantics_from_string(options.semantics));
  } else {
    checks = {concord::Semantics::Grounded, concord::Semantics::Complete,
              concord::Semantics::Preferred};
  }

  ordered_json doc = document_header(options, scenario, "oracle");
  doc["oracle_cap"] = options.oracle_cap;
  doc["results"] = ordered_json::array();
  bool all_match = true;
  for (const auto semantics : checks) {
    const auto fast = concord::extensions(reduce(compiled.vf), semantics);
    const auto slow =
        concord::oracle_extensions(reduce(compiled.vf), semantics, options.oracle_cap);
    const bool match = fast == slow;
    all_match = all_match && match;
    ordered_json entry;
    entry["semantics"] = concord::to_string(semantics);
    entry["match"] = match;
    entry["extensions"] = fast.size();
    doc["results"].push_back(entry);
    if (options.format == "text") {
      std::cout << concord::to_string(semantics) << ": " << fast.size()
                << " extension(s), oracle " << (match ? "agrees" : "DISAGREES") << "\n";
    }
    if (!match) {
      std::cerr << "oracle mismatch under " << concord::to_string(semantics) << ":\n";
      for (const auto& e : fast) {
        if (std::find(slow.begin(), slow.end(), e) == slow.end()) {
          std::cerr << "  only optimized: " << e.str() << "\n";
        }
      }
      for (const auto& e : slow) {
        if (std::find(fast.begin(), fast.end(), e) == fast.end()) {
          std::cerr << "  only oracle: " << e.str() << "\n";
        }
      }
    }
  }
  doc["match"] = all_match;
  emit(options, std::move(doc), timer);
  return all_match ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"value-driven normative argumentation engine"};
  app.require_subcommand(1);

  Options options;
  int (*run)(const Options&) = nullptr;

  const auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("scenario", options.path, "scenario file")->required();
    cmd->add_option("--semantics", options.semantics, "grounded | complete | preferred")
        ->check(CLI::IsMember({"grounded", "complete", "preferred"}));
    cmd->add_option("--principle", options.principle, "elitist | democratic")
        ->check(CLI::IsMember({"elitist", "democratic"}));
    cmd->add_option("--format", options.format, "text | structured")
        ->check(CLI::IsMember({"text", "structured"}));
    return cmd;
  };

  auto* check = add_common(app.add_subcommand("check", "parse and validate a scenario"));
  auto* solve =
      add_common(app.add_subcommand("solve", "list extensions under a semantics"));
  auto* agree = add_common(
      app.add_subcommand("agree", "select the extensions maximizing agreement"));
  auto* explain = add_common(
      app.add_subcommand("explain", "explain why a decision is accepted or rejected"));
  explain->add_option("--target", options.target, "conclusion literal or argument id")
      ->required();
  auto* oracle = add_common(
      app.add_subcommand("oracle", "cross-check the solver against the reference solver"));
  oracle->add_option("--oracle-cap", options.oracle_cap,
                     "largest framework the reference solver will accept");

  check->callback([&] { run = cmd_check; });
  solve->callback([&] { run = cmd_solve; });
  agree->callback([&] { run = cmd_agree; });
  explain->callback([&] { run = cmd_explain; });
  oracle->callback([&] { run = cmd_oracle; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  const auto parsed = app.get_subcommands();
  options.semantics_given = !parsed.empty() && parsed.front()->count("--semantics") > 0;

  try {
    return run(options);
  } catch (const concord::IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const concord::ParseError& e) {
    std::cerr << "error: " << options.path << ":" << e.what() << "\n";
    if (!e.expected().empty()) {
      std::cerr << "expected:";
      for (const auto& t : e.expected()) std::cerr << " " << t;
      std::cerr << "\n";
    }
    return 2;
  } catch (const concord::CompileError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const concord::DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
}
