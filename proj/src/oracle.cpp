// Copyright 2026 The Concord Authors
// Licensed under the Apache License, Version 2.0 (https://www.apache.org/licenses/LICENSE-2.0)

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <sstream>
#include <vector>

#include "concord/aaf.hpp"

// Reference solver. Deliberately brute force and deliberately separate from
// the labelling search in aaf.cpp: it rebuilds its own adjacency from the
// raw attack list and evaluates the defining conditions of each semantics on
// every subset bitmask. Its only job is to disagree loudly if the fast path
// is ever wrong.

namespace concord {

namespace {

using Mask = std::uint64_t;

struct Subsets {
  int n = 0;
  std::vector<Mask> attackers;  // attackers[a] = bitmask of arguments attacking a
  std::vector<Mask> targets;    // targets[a] = bitmask of arguments a attacks

  bool conflict_free(Mask s) const {
    for (int a = 0; a < n; ++a) {
      if ((s >> a) & 1) {
        if (targets[static_cast<std::size_t>(a)] & s) return false;
      }
    }
    return true;
  }

  bool defended_by(Mask s, int a) const {
    Mask remaining = attackers[static_cast<std::size_t>(a)];
    while (remaining) {
      const int attacker = std::countr_zero(remaining);
      remaining &= remaining - 1;
      if (!(attackers[static_cast<std::size_t>(attacker)] & s)) return false;
    }
    return true;
  }

  bool admissible(Mask s) const {
    if (!conflict_free(s)) return false;
    for (int a = 0; a < n; ++a) {
      if (((s >> a) & 1) && !defended_by(s, a)) return false;
    }
    return true;
  }

  bool complete(Mask s) const {
    if (!admissible(s)) return false;
    for (int a = 0; a < n; ++a) {
      if (defended_by(s, a) && !((s >> a) & 1)) return false;
    }
    return true;
  }
};

bool subset_of(Mask a, Mask b) { return (a & ~b) == 0; }

}  // namespace

std::vector<Extension> oracle_extensions(const Framework& framework, Semantics semantics,
                                         std::size_t cap) {
  if (cap > 62) cap = 62;  // bitmask width
  if (framework.size() > cap) {
    std::ostringstream msg;
    msg << "oracle refuses frameworks with more than " << cap << " arguments (got "
        << framework.size() << ")";
    throw DomainError(msg.str());
  }

  const std::vector<ArgumentId> names(framework.arguments().begin(),
                                      framework.arguments().end());
  std::map<ArgumentId, int> index;
  for (std::size_t i = 0; i < names.size(); ++i) {
    index[names[i]] = static_cast<int>(i);
  }

  Subsets s;
  s.n = static_cast<int>(names.size());
  s.attackers.assign(names.size(), 0);
  s.targets.assign(names.size(), 0);
  for (const auto& [from, to] : framework.attacks()) {
    const int f = index.at(from);
    const int t = index.at(to);
    s.targets[static_cast<std::size_t>(f)] |= Mask{1} << t;
    s.attackers[static_cast<std::size_t>(t)] |= Mask{1} << f;
  }

  std::vector<Mask> complete;
  const Mask limit = Mask{1} << s.n;
  for (Mask candidate = 0; candidate < limit; ++candidate) {
    if (s.complete(candidate)) complete.push_back(candidate);
  }

  std::vector<Mask> chosen;
  switch (semantics) {
    case Semantics::Complete:
      chosen = complete;
      break;
    case Semantics::Grounded:
      for (Mask c : complete) {
        bool minimal = true;
        for (Mask other : complete) {
          if (other != c && subset_of(other, c)) {
            minimal = false;
            break;
          }
        }
        if (minimal) chosen.push_back(c);
      }
      break;
    case Semantics::Preferred:
      for (Mask c : complete) {
        bool maximal = true;
        for (Mask other : complete) {
          if (other != c && subset_of(c, other)) {
            maximal = false;
            break;
          }
        }
        if (maximal) chosen.push_back(c);
      }
      break;
  }

  std::vector<Extension> out;
  for (Mask c : chosen) {
    Extension e;
    for (int a = 0; a < s.n; ++a) {
      if ((c >> a) & 1) e.members.push_back(names[static_cast<std::size_t>(a)]);
    }
    out.push_back(std::move(e));
  }
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

}  // namespace concord
