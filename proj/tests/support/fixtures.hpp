// Copyright 2026 The Concord Authors
// Licensed under the Apache License, Version 2.0 (https://www.apache.org/licenses/LICENSE-2.0)

#pragma once

#include <random>
#include <set>
#include <string>
#include <vector>

#include "concord/values.hpp"

namespace concord::fixtures {

// The smart-home incident, frozen by hand. Expected results:
//   complete  {E}, {B,E}, {A,C,E}
//   preferred {B,E}, {A,C,E}
//   grounded  {E}
inline Framework smart_home() {
  return Framework({"A", "B", "C", "D", "E"},
                   {{"A", "B"}, {"B", "A"}, {"B", "C"}, {"C", "B"}, {"D", "B"}, {"E", "D"}});
}

inline ValueOrder chain_order() {
  return ValueOrder({"Legality", "Responsibility", "Protect_Privacy", "Autonomy",
                     "Good_To_Consumers", "Healthy"},
                    {{"Legality", "Responsibility"},
                     {"Responsibility", "Protect_Privacy"},
                     {"Protect_Privacy", "Autonomy"},
                     {"Autonomy", "Good_To_Consumers"},
                     {"Good_To_Consumers", "Healthy"}});
}

inline ValueFramework smart_home_vba() {
  return make_value_framework(
      smart_home(), {"A", "B", "C"}, {"Parents", "Manufacturer", "Law", "Child"},
      chain_order(),
      {{"A", {"Healthy", "Responsibility", "Autonomy"}},
       {"B", {"Healthy", "Legality"}},
       {"C", {"Good_To_Consumers", "Protect_Privacy"}}},
      {{"A", {"Parents"}}, {"B", {"Law"}}, {"C", {"Manufacturer"}}, {"D", {"Child"}}});
}

inline Extension ext(std::vector<ArgumentId> members) {
  return Extension{std::move(members)};
}

/// Random framework over arguments a0..a{n-1} with i.i.d. attack edges.
inline Framework random_framework(std::mt19937& rng, int n, double edge_probability) {
  std::set<ArgumentId> args;
  std::vector<ArgumentId> names;
  for (int i = 0; i < n; ++i) {
    names.push_back("a" + std::to_string(i));
    args.insert(names.back());
  }
  std::bernoulli_distribution edge(edge_probability);
  std::set<AttackPair> attacks;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (edge(rng)) attacks.insert({names[static_cast<std::size_t>(i)],
                                     names[static_cast<std::size_t>(j)]});
    }
  }
  return Framework(args, attacks);
}

inline std::set<ArgumentId> as_set(const Extension& e) {
  return {e.members.begin(), e.members.end()};
}

}  // namespace concord::fixtures
