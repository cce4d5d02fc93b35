// Copyright 2026 The Concord Authors
// Licensed under the Apache License, Version 2.0 (https://www.apache.org/licenses/LICENSE-2.0)

#pragma once

#include <cstddef>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "concord/errors.hpp"

namespace concord {

using ArgumentId = std::string;
using AttackPair = std::pair<ArgumentId, ArgumentId>;

enum class Semantics { Grounded, Complete, Preferred };

const char* to_string(Semantics semantics);
Semantics semantics_from_string(const std::string& name);  // DomainError on unknown name

/// An immutable directed attack graph over named arguments.
///
/// Argument names are non-empty tokens over [A-Za-z0-9_]. Both endpoints of
/// every attack must name a member argument. Arguments and attacks are kept
/// sorted, so iteration order never depends on construction order.
class Framework {
 public:
  Framework() = default;
  Framework(const std::set<ArgumentId>& arguments, const std::set<AttackPair>& attacks);

  const std::vector<ArgumentId>& arguments() const { return args_; }
  const std::vector<AttackPair>& attacks() const { return attack_pairs_; }
  std::size_t size() const { return args_.size(); }

  bool has_argument(const ArgumentId& id) const;
  bool has_attack(const ArgumentId& from, const ArgumentId& to) const;

  /// Position of `id` in arguments(); DomainError if unknown.
  int index_of(const ArgumentId& id) const;
  const ArgumentId& name(int index) const { return args_[index]; }
  const std::vector<int>& attackers_of(int index) const { return attackers_[index]; }
  const std::vector<int>& targets_of(int index) const { return targets_[index]; }

  friend bool operator==(const Framework& a, const Framework& b) {
    return a.args_ == b.args_ && a.attack_pairs_ == b.attack_pairs_;
  }

 private:
  std::vector<ArgumentId> args_;
  std::vector<AttackPair> attack_pairs_;
  std::vector<std::vector<int>> attackers_;
  std::vector<std::vector<int>> targets_;
};

/// A set of arguments accepted together. Members are sorted by name.
struct Extension {
  std::vector<ArgumentId> members;

  bool contains(const ArgumentId& id) const;
  std::string str() const;  // "{A, B}"

  friend bool operator==(const Extension&, const Extension&) = default;
};

/// Orders extensions by size first, then lexicographically by member list.
/// Every list of extensions the engine returns is sorted this way.
bool canonical_less(const Extension& a, const Extension& b);

std::vector<ArgumentId> attackers(const Framework& framework, const ArgumentId& id);

bool is_conflict_free(const Framework& framework, const std::set<ArgumentId>& subset);

/// True iff every attacker of `id` is attacked by some member of `subset`.
bool defends(const Framework& framework, const std::set<ArgumentId>& subset,
             const ArgumentId& id);

bool is_admissible(const Framework& framework, const std::set<ArgumentId>& subset);

Extension grounded_extension(const Framework& framework);
std::vector<Extension> complete_extensions(const Framework& framework);
std::vector<Extension> preferred_extensions(const Framework& framework);
std::vector<Extension> extensions(const Framework& framework, Semantics semantics);

enum class AcceptanceStatus { Skeptical, Credulous, Rejected };

const char* to_string(AcceptanceStatus status);

/// Skeptical: in every extension; credulous: in some but not all;
/// rejected: in none.
AcceptanceStatus acceptance_status(const Framework& framework, Semantics semantics,
                                   const ArgumentId& id);

/// Reference solver: enumerates all subsets of the argument set and tests
/// the defining conditions of the requested semantics directly. Refuses
/// frameworks larger than `cap` arguments. Kept free of the labelling
/// machinery on purpose; do not fold the two code paths together.
std::vector<Extension> oracle_extensions(const Framework& framework, Semantics semantics,
                                         std::size_t cap = 16);

}  // namespace concord
