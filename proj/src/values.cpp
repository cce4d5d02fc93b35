// Copyright 2026 The Concord Authors
// Licensed under the Apache License, Version 2.0 (https://www.apache.org/licenses/LICENSE-2.0)

#include "concord/values.hpp"

#include <algorithm>

namespace concord {

const char* to_string(LiftingPrinciple principle) {
  switch (principle) {
    case LiftingPrinciple::Elitist: return "elitist";
    case LiftingPrinciple::Democratic: return "democratic";
  }
  throw DomainError("unhandled lifting principle");
}

LiftingPrinciple principle_from_string(const std::string& name) {
  if (name == "elitist") return LiftingPrinciple::Elitist;
  if (name == "democratic") return LiftingPrinciple::Democratic;
  throw DomainError("unknown lifting principle '" + name +
                    "' (expected elitist or democratic)");
}

ValueOrder::ValueOrder(const std::set<ValueId>& values,
                       const std::set<std::pair<ValueId, ValueId>>& geq_pairs) {
  values_.assign(values.begin(), values.end());
  const auto n = values_.size();
  geq_.assign(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) geq_[i][i] = true;
  for (const auto& [hi, lo] : geq_pairs) {
    geq_[static_cast<std::size_t>(index(hi))][static_cast<std::size_t>(index(lo))] = true;
  }
  // Floyd-Warshall style reachability closure.
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!geq_[i][k]) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (geq_[k][j]) geq_[i][j] = true;
      }
    }
  }
}

bool ValueOrder::contains(const ValueId& value) const {
  return std::binary_search(values_.begin(), values_.end(), value);
}

int ValueOrder::index(const ValueId& value) const {
  const auto it = std::lower_bound(values_.begin(), values_.end(), value);
  if (it == values_.end() || *it != value) {
    throw DomainError("unknown value '" + value + "'");
  }
  return static_cast<int>(it - values_.begin());
}

bool ValueOrder::geq(const ValueId& v1, const ValueId& v2) const {
  return geq_[static_cast<std::size_t>(index(v1))][static_cast<std::size_t>(index(v2))];
}

bool lift_elitist(const ValueOrder& order, const std::set<ValueId>& v1,
                  const std::set<ValueId>& v2) {
  if (v1.empty() || v2.empty()) return v1.empty() && v2.empty();
  for (const auto& witness : v2) {
    bool bounds_all = true;
    for (const auto& member : v1) {
      if (!order.geq(member, witness)) {
        bounds_all = false;
        break;
      }
    }
    if (bounds_all) return true;
  }
  return false;
}

bool lift_democratic(const ValueOrder& order, const std::set<ValueId>& v1,
                     const std::set<ValueId>& v2) {
  for (const auto& target : v2) {
    bool covered = false;
    for (const auto& member : v1) {
      if (order.geq(member, target)) {
        covered = true;
        break;
      }
    }
    if (!covered) return false;
  }
  return true;
}

bool lift(const ValueOrder& order, LiftingPrinciple principle,
          const std::set<ValueId>& v1, const std::set<ValueId>& v2) {
  switch (principle) {
    case LiftingPrinciple::Elitist: return lift_elitist(order, v1, v2);
    case LiftingPrinciple::Democratic: return lift_democratic(order, v1, v2);
  }
  throw DomainError("unhandled lifting principle");
}

bool strictly_preferred(const ValueOrder& order, LiftingPrinciple principle,
                        const std::set<ValueId>& v1, const std::set<ValueId>& v2) {
  return lift(order, principle, v1, v2) && !lift(order, principle, v2, v1);
}

ValueFramework make_value_framework(Framework framework, std::set<ArgumentId> practical,
                                    std::set<AgentId> agents, ValueOrder order,
                                    std::map<ArgumentId, std::set<ValueId>> val,
                                    std::map<ArgumentId, std::set<AgentId>> pi) {
  ValueFramework vf;
  vf.framework = std::move(framework);
  vf.practical = std::move(practical);
  vf.agents = std::move(agents);
  vf.order = std::move(order);
  vf.val = std::move(val);
  vf.pi = std::move(pi);

  for (const auto& id : vf.practical) {
    if (!vf.framework.has_argument(id)) {
      throw DomainError("practical argument '" + id + "' is not in the framework");
    }
  }
  for (const auto& id : vf.framework.arguments()) {
    if (!vf.practical.count(id)) vf.epistemic.insert(id);
  }
  for (const auto& [from, to] : vf.framework.attacks()) {
    if (vf.practical.count(from) && vf.epistemic.count(to)) {
      throw DomainError("attack " + from + " -> " + to +
                        " runs from a practical argument to an epistemic one");
    }
  }
  for (const auto& [id, values] : vf.val) {
    if (!vf.practical.count(id)) {
      throw DomainError("val assigns values to non-practical argument '" + id + "'");
    }
    for (const auto& v : values) {
      if (!vf.order.contains(v)) {
        throw DomainError("argument '" + id + "' promotes undeclared value '" + v + "'");
      }
    }
  }
  for (const auto& id : vf.practical) vf.val.try_emplace(id);
  for (const auto& [id, holders] : vf.pi) {
    if (!vf.framework.has_argument(id)) {
      throw DomainError("pi mentions unknown argument '" + id + "'");
    }
    for (const auto& agent : holders) {
      if (!vf.agents.count(agent)) {
        throw DomainError("argument '" + id + "' names undeclared stakeholder '" + agent +
                          "'");
      }
    }
  }
  for (const auto& id : vf.framework.arguments()) vf.pi.try_emplace(id);
  return vf;
}

const Framework& reduce(const ValueFramework& vf) { return vf.framework; }

std::set<ValueId> extension_values(const ValueFramework& vf, const Extension& extension) {
  std::set<ValueId> out;
  for (const auto& id : extension.members) {
    vf.framework.index_of(id);  // reject members outside the framework
    const auto it = vf.val.find(id);
    if (it != vf.val.end()) out.insert(it->second.begin(), it->second.end());
  }
  return out;
}

std::vector<Extension> maximal_agreement(const ValueFramework& vf, Semantics semantics,
                                         LiftingPrinciple principle) {
  const auto all = extensions(reduce(vf), semantics);
  std::vector<std::set<ValueId>> value_sets;
  value_sets.reserve(all.size());
  for (const auto& e : all) value_sets.push_back(extension_values(vf, e));

  std::vector<Extension> out;
  for (std::size_t i = 0; i < all.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < all.size(); ++j) {
      if (j != i && strictly_preferred(vf.order, principle, value_sets[j], value_sets[i])) {
        dominated = true;
        break;
      }
    }
    if (!dominated) out.push_back(all[i]);
  }
  return out;  // `all` is canonical, so the filtered list is too
}

}  // namespace concord
