// Copyright 2026 The Concord Authors
// Licensed under the Apache License, Version 2.0 (https://www.apache.org/licenses/LICENSE-2.0)

#include "concord/parser.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

namespace concord {

namespace {

// One statement per line; '#' starts a comment; tokens are [A-Za-z0-9_]+
// words, '~' negation, and the symbols : , ( ) = => -> >=.

struct Token {
  enum class Kind { Word, Symbol, End };
  Kind kind = Kind::End;
  std::string text;
  int line = 1;
  int column = 1;
};

bool word_char(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') ||
         c == '_';
}

std::vector<std::string> split_lines(const std::string& source) {
  std::vector<std::string> lines;
  std::string current;
  for (char c : source) {
    if (c == '\n') {
      if (!current.empty() && current.back() == '\r') current.pop_back();
      lines.push_back(std::move(current));
      current.clear();
    } else {
      current.push_back(c);
    }
  }
  if (!current.empty() && current.back() == '\r') current.pop_back();
  lines.push_back(std::move(current));
  return lines;
}

std::vector<Token> tokenize_line(const std::string& text, int line) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    const int column = static_cast<int>(i) + 1;
    if (c == ' ' || c == '\t') {
      ++i;
      continue;
    }
    if (c == '#') break;
    if (word_char(c)) {
      std::size_t j = i;
      while (j < text.size() && word_char(text[j])) ++j;
      tokens.push_back({Token::Kind::Word, text.substr(i, j - i), line, column});
      i = j;
      continue;
    }
    auto symbol = [&](const std::string& s) {
      if (text.compare(i, s.size(), s) != 0) return false;
      tokens.push_back({Token::Kind::Symbol, s, line, column});
      i += s.size();
      return true;
    };
    if (symbol("=>") || symbol(">=") || symbol("->") || symbol("=") || symbol(":") ||
        symbol(",") || symbol("(") || symbol(")") || symbol("~")) {
      continue;
    }
    std::ostringstream msg;
    if (c >= 0x20 && c < 0x7f) {
      msg << "unexpected character '" << c << "'";
    } else {
      msg << "unexpected byte 0x" << std::hex << (static_cast<unsigned>(c) & 0xff);
    }
    throw ParseError(line, column, msg.str());
  }
  tokens.push_back({Token::Kind::End, "", line, static_cast<int>(text.size()) + 1});
  return tokens;
}

/// Cursor over one line of tokens.
class Line {
 public:
  explicit Line(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  const Token& peek() const { return tokens_[pos_]; }
  bool at_end() const { return peek().kind == Token::Kind::End; }

  bool accept_symbol(const std::string& s) {
    if (peek().kind == Token::Kind::Symbol && peek().text == s) {
      ++pos_;
      return true;
    }
    return false;
  }

  bool accept_word(const std::string& w) {
    if (peek().kind == Token::Kind::Word && peek().text == w) {
      ++pos_;
      return true;
    }
    return false;
  }

  Token expect_word(const std::string& what) {
    if (peek().kind != Token::Kind::Word) fail(what, {what});
    return tokens_[pos_++];
  }

  void expect_symbol(const std::string& s) {
    if (!accept_symbol(s)) fail("'" + s + "'", {s});
  }

  void expect_end() {
    if (!at_end()) fail("end of line", {"end of line"});
  }

  [[noreturn]] void fail(const std::string& wanted, std::vector<std::string> expected) {
    const Token& t = peek();
    std::ostringstream msg;
    if (t.kind == Token::Kind::End) {
      msg << "expected " << wanted << " before end of line";
    } else {
      msg << "expected " << wanted << ", found '" << t.text << "'";
    }
    throw ParseError(t.line, t.column, msg.str(), std::move(expected));
  }

 private:
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

/// An identifier occurrence, kept for positioned reference errors.
struct Ref {
  std::string id;
  int line = 1;
  int column = 1;
};

struct Parser {
  Scenario scenario;

  bool saw_version = false;
  std::optional<Ref> name;
  std::optional<Ref> kind;
  std::optional<Ref> stakeholders_line;
  std::optional<Ref> values_line;

  std::vector<Ref> stakeholder_decls;
  std::vector<Ref> value_decls;
  std::vector<std::pair<Ref, Ref>> order_refs;
  std::vector<Ref> fact_refs;       // id = literal text
  std::vector<Ref> assumption_refs;

  struct RuleStmt {
    Ref id;
    std::optional<Ref> stakeholder;
    std::vector<Ref> values;
    std::vector<std::pair<Ref, Literal>> antecedents;
    Literal consequent;
    Ref consequent_ref;
    std::optional<Ref> target_norm;  // standpoints only
    enum class What { Norm, Belief, Standpoint } what = What::Norm;
  };
  std::vector<RuleStmt> rules;

  struct AliasStmt {
    Ref name;
    DerivationSketch sketch;
    std::vector<Ref> rule_refs;  // every rule id inside the sketch
  };
  std::vector<AliasStmt> alias_stmts;

  struct ArgumentStmt {
    Ref id;
    bool practical = false;
    std::vector<Ref> values;
    std::vector<Ref> agents;
  };
  std::vector<ArgumentStmt> argument_stmts;
  std::vector<std::pair<Ref, Ref>> attack_refs;

  std::map<std::string, DerivationSketch> alias_by_name;

  static Ref ref(const Token& t) { return Ref{t.text, t.line, t.column}; }

  [[noreturn]] static void fail(const Ref& at, const std::string& message) {
    throw ParseError(at.line, at.column, message);
  }

  Literal parse_literal(Line& line, const std::string& what) {
    if (line.accept_symbol("~")) {
      const Token atom = line.expect_word(what);
      return Literal{atom.text, true};
    }
    const Token atom = line.expect_word(what);
    return Literal{atom.text, false};
  }

  void parse_line(const std::string& text, int number) {
    Line line(tokenize_line(text, number));
    if (line.at_end()) return;
    const Token head = line.expect_word("a statement keyword");
    if (head.text == "version") {
      statement_version(line, head);
    } else if (head.text == "scenario") {
      statement_scenario(line, head);
    } else if (head.text == "kind") {
      statement_kind(line, head);
    } else if (head.text == "stakeholders") {
      statement_stakeholders(line, head);
    } else if (head.text == "values") {
      statement_values(line, head);
    } else if (head.text == "order") {
      statement_order(line);
    } else if (head.text == "fact") {
      statement_fact(line);
    } else if (head.text == "assumption") {
      statement_assumption(line);
    } else if (head.text == "belief") {
      statement_belief(line);
    } else if (head.text == "norm") {
      statement_norm(line);
    } else if (head.text == "standpoint") {
      statement_standpoint(line);
    } else if (head.text == "alias") {
      statement_alias(line);
    } else if (head.text == "argument") {
      statement_argument(line);
    } else if (head.text == "attack") {
      statement_attack(line);
    } else {
      throw ParseError(head.line, head.column,
                       "unknown statement '" + head.text + "'",
                       {"version", "scenario", "kind", "stakeholders", "values", "order",
                        "fact", "assumption", "belief", "norm", "standpoint", "alias",
                        "argument", "attack"});
    }
    line.expect_end();
  }

  void statement_version(Line& line, const Token& head) {
    if (saw_version) throw ParseError(head.line, head.column, "duplicate version statement");
    const Token value = line.expect_word("a version number");
    if (value.text != "1") {
      throw ParseError(value.line, value.column,
                       "unsupported version '" + value.text + "' (expected 1)");
    }
    saw_version = true;
  }

  void statement_scenario(Line& line, const Token& head) {
    if (name) throw ParseError(head.line, head.column, "duplicate scenario statement");
    name = ref(line.expect_word("a scenario name"));
  }

  void statement_kind(Line& line, const Token& head) {
    if (kind) throw ParseError(head.line, head.column, "duplicate kind statement");
    const Token value = line.expect_word("'abstract' or 'structured'");
    if (value.text != "abstract" && value.text != "structured") {
      throw ParseError(value.line, value.column,
                       "unknown kind '" + value.text + "'", {"abstract", "structured"});
    }
    kind = ref(value);
  }

  void statement_stakeholders(Line& line, const Token& head) {
    if (stakeholders_line) {
      throw ParseError(head.line, head.column, "duplicate stakeholders statement");
    }
    stakeholders_line = ref(head);
    do {
      stakeholder_decls.push_back(ref(line.expect_word("a stakeholder name")));
    } while (!line.at_end());
  }

  void statement_values(Line& line, const Token& head) {
    if (values_line) throw ParseError(head.line, head.column, "duplicate values statement");
    values_line = ref(head);
    do {
      value_decls.push_back(ref(line.expect_word("a value name")));
    } while (!line.at_end());
  }

  void statement_order(Line& line) {
    Ref left = ref(line.expect_word("a value name"));
    line.expect_symbol(">=");
    do {
      Ref right = ref(line.expect_word("a value name"));
      order_refs.emplace_back(left, right);
      left = right;
    } while (line.accept_symbol(">="));
  }

  void statement_fact(Line& line) {
    const Token& at = line.peek();
    const Literal l = parse_literal(line, "a literal");
    fact_refs.push_back(Ref{l.str(), at.line, at.column});
  }

  void statement_assumption(Line& line) {
    const Token& at = line.peek();
    const Literal l = parse_literal(line, "a literal");
    assumption_refs.push_back(Ref{l.str(), at.line, at.column});
  }

  std::vector<std::pair<Ref, Literal>> parse_antecedents(Line& line,
                                                         const std::string& stop) {
    // Literals up to (not consuming) the stop symbol; possibly none.
    std::vector<std::pair<Ref, Literal>> out;
    while (!(line.peek().kind == Token::Kind::Symbol && line.peek().text == stop)) {
      const Token& at = line.peek();
      const Ref here{at.text, at.line, at.column};
      out.emplace_back(here, parse_literal(line, "a literal or '" + stop + "'"));
    }
    return out;
  }

  void statement_belief(Line& line) {
    RuleStmt rule;
    rule.what = RuleStmt::What::Belief;
    rule.id = ref(line.expect_word("a belief id"));
    line.expect_symbol(":");
    rule.antecedents = parse_antecedents(line, "=>");
    line.expect_symbol("=>");
    rule.consequent_ref = ref(line.peek());
    rule.consequent = parse_literal(line, "a literal");
    rules.push_back(std::move(rule));
  }

  void statement_norm(Line& line) {
    RuleStmt rule;
    rule.what = RuleStmt::What::Norm;
    rule.id = ref(line.expect_word("a norm id"));
    if (!line.accept_word("by")) line.fail("'by'", {"by"});
    rule.stakeholder = ref(line.expect_word("a stakeholder name"));
    if (!line.accept_word("values")) line.fail("'values'", {"values"});
    do {
      rule.values.push_back(ref(line.expect_word("a value name")));
    } while (!(line.peek().kind == Token::Kind::Symbol && line.peek().text == ":"));
    line.expect_symbol(":");
    rule.antecedents = parse_antecedents(line, "=>");
    line.expect_symbol("=>");
    rule.consequent_ref = ref(line.peek());
    rule.consequent = parse_literal(line, "a literal");
    rules.push_back(std::move(rule));
  }

  void statement_standpoint(Line& line) {
    RuleStmt rule;
    rule.what = RuleStmt::What::Standpoint;
    rule.id = ref(line.expect_word("a standpoint id"));
    if (!line.accept_word("by")) line.fail("'by'", {"by"});
    rule.stakeholder = ref(line.expect_word("a stakeholder name"));
    line.expect_symbol(":");
    while (!line.accept_word("undercuts")) {
      const Token& at = line.peek();
      const Ref here{at.text, at.line, at.column};
      rule.antecedents.emplace_back(here,
                                    parse_literal(line, "a literal or 'undercuts'"));
    }
    rule.target_norm = ref(line.expect_word("a norm id"));
    rules.push_back(std::move(rule));
  }

  DerivationSketch parse_sketch(Line& line, AliasStmt& stmt) {
    if (line.accept_symbol("~")) {
      const Token atom = line.expect_word("an atom");
      DerivationSketch leaf;
      leaf.leaf = true;
      leaf.literal = Literal{atom.text, true};
      return leaf;
    }
    const Token head = line.expect_word("a literal or rule application");
    if (!line.accept_symbol("(")) {
      // Bare word: an earlier alias name, else a literal leaf.
      const auto it = alias_by_name.find(head.text);
      if (it != alias_by_name.end()) return it->second;
      DerivationSketch leaf;
      leaf.leaf = true;
      leaf.literal = Literal{head.text, false};
      return leaf;
    }
    DerivationSketch node;
    node.leaf = false;
    node.rule_id = head.text;
    stmt.rule_refs.push_back(ref(head));
    if (!line.accept_symbol(")")) {
      do {
        node.children.push_back(parse_sketch(line, stmt));
      } while (line.accept_symbol(","));
      line.expect_symbol(")");
    }
    return node;
  }

  void statement_alias(Line& line) {
    AliasStmt stmt;
    stmt.name = ref(line.expect_word("an alias name"));
    line.expect_symbol("=");
    stmt.sketch = parse_sketch(line, stmt);
    if (alias_by_name.count(stmt.name.id)) {
      fail(stmt.name, "duplicate alias '" + stmt.name.id + "'");
    }
    alias_by_name[stmt.name.id] = stmt.sketch;
    alias_stmts.push_back(std::move(stmt));
  }

  void statement_argument(Line& line) {
    ArgumentStmt stmt;
    stmt.id = ref(line.expect_word("an argument id"));
    if (line.accept_word("practical")) {
      stmt.practical = true;
    } else if (line.accept_word("epistemic")) {
      stmt.practical = false;
    } else {
      line.fail("'practical' or 'epistemic'", {"practical", "epistemic"});
    }
    if (line.accept_word("values")) {
      do {
        stmt.values.push_back(ref(line.expect_word("a value name")));
      } while (!line.at_end() && !(line.peek().kind == Token::Kind::Word &&
                                   line.peek().text == "by"));
    }
    if (line.accept_word("by")) {
      do {
        stmt.agents.push_back(ref(line.expect_word("a stakeholder name")));
      } while (!line.at_end());
    }
    argument_stmts.push_back(std::move(stmt));
  }

  void statement_attack(Line& line) {
    const Ref from = ref(line.expect_word("an argument id"));
    line.expect_symbol("->");
    const Ref to = ref(line.expect_word("an argument id"));
    attack_refs.emplace_back(from, to);
  }

  // Cross-reference validation; every error points at the offending token.

  template <typename T>
  static std::set<std::string> declared(const std::vector<Ref>& decls, const T& what) {
    std::set<std::string> out;
    for (const auto& d : decls) {
      if (!out.insert(d.id).second) {
        fail(d, std::string("duplicate ") + what + " '" + d.id + "'");
      }
    }
    return out;
  }

  void check_declared(const std::set<std::string>& known, const Ref& use,
                      const char* what) {
    if (!known.count(use.id)) {
      fail(use, std::string("undeclared ") + what + " '" + use.id + "'");
    }
  }

  Scenario finish() {
    if (!name) throw ParseError(1, 1, "missing 'scenario <name>' statement");
    if (!kind) throw ParseError(1, 1, "missing 'kind abstract|structured' statement");
    scenario.name = name->id;
    scenario.kind =
        kind->id == "abstract" ? ScenarioKind::Abstract : ScenarioKind::Structured;

    const bool structured = scenario.kind == ScenarioKind::Structured;
    if (structured && (!argument_stmts.empty() || !attack_refs.empty())) {
      const Ref& at = argument_stmts.empty() ? attack_refs.front().first
                                             : argument_stmts.front().id;
      fail(at, "argument/attack statements require kind abstract");
    }
    if (!structured &&
        (!rules.empty() || !fact_refs.empty() || !assumption_refs.empty() ||
         !alias_stmts.empty())) {
      const Ref& at = !rules.empty()            ? rules.front().id
                      : !fact_refs.empty()      ? fact_refs.front()
                      : !assumption_refs.empty() ? assumption_refs.front()
                                                 : alias_stmts.front().name;
      fail(at, "norm/belief/fact/assumption/alias statements require kind structured");
    }

    const auto agents = declared(stakeholder_decls, "stakeholder");
    const auto values = declared(value_decls, "value");
    for (const auto& d : stakeholder_decls) scenario.stakeholders.push_back(d.id);
    for (const auto& d : value_decls) scenario.values.push_back(d.id);

    std::set<std::pair<ValueId, ValueId>> pairs;
    for (const auto& [hi, lo] : order_refs) {
      check_declared(values, hi, "value");
      check_declared(values, lo, "value");
      pairs.insert({hi.id, lo.id});
    }
    scenario.order_pairs.assign(pairs.begin(), pairs.end());

    if (structured) {
      finish_structured(agents, values);
    } else {
      finish_abstract(agents, values);
    }
    return std::move(scenario);
  }

  void finish_structured(const std::set<std::string>& agents,
                         const std::set<std::string>& values) {
    std::set<Literal> observed;
    for (const auto& f : fact_refs) {
      const Literal l = literal_from_string(f.id);
      if (observed.count(l)) fail(f, "duplicate fact '" + f.id + "'");
      if (observed.count(l.complement())) {
        fail(f, "fact '" + f.id + "' contradicts an earlier fact");
      }
      observed.insert(l);
      scenario.observations.push_back({l});
    }
    std::set<Literal> assumed;
    for (const auto& a : assumption_refs) {
      const Literal l = literal_from_string(a.id);
      if (assumed.count(l)) fail(a, "duplicate assumption '" + a.id + "'");
      if (observed.count(l)) {
        fail(a, "assumption '" + a.id + "' duplicates a fact");
      }
      assumed.insert(l);
      scenario.assumptions.push_back({l});
    }

    std::set<std::string> rule_ids;
    std::set<std::string> norm_ids;
    for (const auto& r : rules) {
      if (!rule_ids.insert(r.id.id).second) {
        fail(r.id, "duplicate rule id '" + r.id.id + "'");
      }
      if (r.what == RuleStmt::What::Norm) norm_ids.insert(r.id.id);
    }
    for (const auto& r : rules) {
      std::set<Literal> antecedents;
      for (const auto& [at, l] : r.antecedents) {
        if (!antecedents.insert(l).second) {
          fail(at, "duplicate antecedent '" + l.str() + "'");
        }
      }
      std::vector<Literal> sorted(antecedents.begin(), antecedents.end());
      switch (r.what) {
        case RuleStmt::What::Norm: {
          Norm n;
          n.id = r.id.id;
          check_declared(agents, *r.stakeholder, "stakeholder");
          n.stakeholder = r.stakeholder->id;
          std::set<ValueId> vs;
          for (const auto& v : r.values) {
            check_declared(values, v, "value");
            if (!vs.insert(v.id).second) fail(v, "duplicate value '" + v.id + "'");
          }
          n.values.assign(vs.begin(), vs.end());
          if (antecedents.count(r.consequent)) {
            fail(r.consequent_ref,
                 "norm '" + n.id + "' concludes one of its own antecedents");
          }
          n.antecedents = sorted;
          n.consequent = r.consequent;
          scenario.norms.push_back(std::move(n));
          break;
        }
        case RuleStmt::What::Belief: {
          Belief b;
          b.id = r.id.id;
          if (antecedents.count(r.consequent)) {
            fail(r.consequent_ref,
                 "belief '" + b.id + "' concludes one of its own antecedents");
          }
          b.antecedents = sorted;
          b.consequent = r.consequent;
          scenario.beliefs.push_back(std::move(b));
          break;
        }
        case RuleStmt::What::Standpoint: {
          Standpoint s;
          s.id = r.id.id;
          check_declared(agents, *r.stakeholder, "stakeholder");
          s.stakeholder = r.stakeholder->id;
          check_declared(norm_ids, *r.target_norm, "norm");
          s.antecedents = sorted;
          s.target_norm = r.target_norm->id;
          scenario.standpoints.push_back(std::move(s));
          break;
        }
      }
    }

    std::map<std::string, std::size_t> arity;
    for (const auto& n : scenario.norms) arity[n.id] = n.antecedents.size();
    for (const auto& b : scenario.beliefs) arity[b.id] = b.antecedents.size();
    for (const auto& s : scenario.standpoints) arity[s.id] = s.antecedents.size();
    for (const auto& stmt : alias_stmts) {
      for (const auto& r : stmt.rule_refs) {
        const auto it = arity.find(r.id);
        if (it == arity.end()) fail(r, "undeclared rule '" + r.id + "'");
      }
      check_sketch_arity(stmt.sketch, stmt);
      scenario.aliases.push_back({stmt.name.id, stmt.sketch});
    }
  }

  void check_sketch_arity(const DerivationSketch& sketch, const AliasStmt& stmt) {
    if (sketch.leaf) return;
    std::size_t wanted = 0;
    for (const auto& n : scenario.norms) {
      if (n.id == sketch.rule_id) wanted = n.antecedents.size();
    }
    for (const auto& b : scenario.beliefs) {
      if (b.id == sketch.rule_id) wanted = b.antecedents.size();
    }
    for (const auto& s : scenario.standpoints) {
      if (s.id == sketch.rule_id) wanted = s.antecedents.size();
    }
    if (sketch.children.size() != wanted) {
      std::ostringstream msg;
      msg << "rule '" << sketch.rule_id << "' takes " << wanted << " antecedent(s), sketch '"
          << sketch.str() << "' gives " << sketch.children.size();
      fail(stmt.name, msg.str());
    }
    for (const auto& child : sketch.children) check_sketch_arity(child, stmt);
  }

  void finish_abstract(const std::set<std::string>& agents,
                       const std::set<std::string>& values) {
    std::set<std::string> ids;
    for (const auto& stmt : argument_stmts) {
      if (!ids.insert(stmt.id.id).second) {
        fail(stmt.id, "duplicate argument '" + stmt.id.id + "'");
      }
      AbstractArgument arg;
      arg.id = stmt.id.id;
      arg.practical = stmt.practical;
      if (!stmt.practical && !stmt.values.empty()) {
        fail(stmt.values.front(), "epistemic argument '" + arg.id + "' carries values");
      }
      std::set<ValueId> vs;
      for (const auto& v : stmt.values) {
        check_declared(values, v, "value");
        if (!vs.insert(v.id).second) fail(v, "duplicate value '" + v.id + "'");
      }
      arg.values.assign(vs.begin(), vs.end());
      std::set<AgentId> as;
      for (const auto& a : stmt.agents) {
        check_declared(agents, a, "stakeholder");
        if (!as.insert(a.id).second) fail(a, "duplicate stakeholder '" + a.id + "'");
      }
      arg.agents.assign(as.begin(), as.end());
      scenario.arguments.push_back(std::move(arg));
    }
    std::map<std::string, bool> practical;
    for (const auto& a : scenario.arguments) practical[a.id] = a.practical;
    std::set<AttackPair> attacks;
    for (const auto& [from, to] : attack_refs) {
      check_declared(ids, from, "argument");
      check_declared(ids, to, "argument");
      if (!attacks.insert({from.id, to.id}).second) {
        fail(from, "duplicate attack " + from.id + " -> " + to.id);
      }
      if (practical[from.id] && !practical[to.id]) {
        fail(from, "attack " + from.id + " -> " + to.id +
                       " runs from a practical argument to an epistemic one");
      }
    }
    scenario.attacks.assign(attacks.begin(), attacks.end());
  }
};

}  // namespace

Scenario parse_scenario(const std::string& source) {
  Parser parser;
  const auto lines = split_lines(source);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    parser.parse_line(lines[i], static_cast<int>(i) + 1);
  }
  return parser.finish();
}

namespace {

void serialize_sketch(std::ostream& out, const DerivationSketch& sketch) {
  if (sketch.leaf) {
    out << sketch.literal.str();
    return;
  }
  out << sketch.rule_id << "(";
  for (std::size_t i = 0; i < sketch.children.size(); ++i) {
    if (i > 0) out << ", ";
    serialize_sketch(out, sketch.children[i]);
  }
  out << ")";
}

void serialize_literals(std::ostream& out, const std::vector<Literal>& literals) {
  for (const auto& l : literals) out << l.str() << " ";
}

}  // namespace

std::string serialize_scenario(const Scenario& scenario) {
  std::ostringstream out;
  out << "version 1\n";
  out << "scenario " << scenario.name << "\n";
  out << "kind " << to_string(scenario.kind) << "\n";
  if (!scenario.stakeholders.empty()) {
    out << "stakeholders";
    for (const auto& s : scenario.stakeholders) out << " " << s;
    out << "\n";
  }
  if (!scenario.values.empty()) {
    out << "values";
    for (const auto& v : scenario.values) out << " " << v;
    out << "\n";
  }
  for (const auto& [hi, lo] : scenario.order_pairs) {
    out << "order " << hi << " >= " << lo << "\n";
  }
  for (const auto& o : scenario.observations) out << "fact " << o.literal.str() << "\n";
  for (const auto& a : scenario.assumptions) {
    out << "assumption " << a.literal.str() << "\n";
  }
  for (const auto& b : scenario.beliefs) {
    out << "belief " << b.id << ": ";
    serialize_literals(out, b.antecedents);
    out << "=> " << b.consequent.str() << "\n";
  }
  for (const auto& n : scenario.norms) {
    out << "norm " << n.id << " by " << n.stakeholder << " values";
    for (const auto& v : n.values) out << " " << v;
    out << ": ";
    serialize_literals(out, n.antecedents);
    out << "=> " << n.consequent.str() << "\n";
  }
  for (const auto& s : scenario.standpoints) {
    out << "standpoint " << s.id << " by " << s.stakeholder << ": ";
    serialize_literals(out, s.antecedents);
    out << "undercuts " << s.target_norm << "\n";
  }
  for (const auto& alias : scenario.aliases) {
    out << "alias " << alias.name << " = ";
    serialize_sketch(out, alias.sketch);
    out << "\n";
  }
  for (const auto& a : scenario.arguments) {
    out << "argument " << a.id << " " << (a.practical ? "practical" : "epistemic");
    if (!a.values.empty()) {
      out << " values";
      for (const auto& v : a.values) out << " " << v;
    }
    if (!a.agents.empty()) {
      out << " by";
      for (const auto& agent : a.agents) out << " " << agent;
    }
    out << "\n";
  }
  for (const auto& [from, to] : scenario.attacks) {
    out << "attack " << from << " -> " << to << "\n";
  }
  return out.str();
}

Scenario load_scenario_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read '" + path + "'");
  std::ostringstream content;
  content << in.rdbuf();
  if (in.bad()) throw IoError("cannot read '" + path + "'");
  return parse_scenario(content.str());
}

}  // namespace concord
