// Copyright 2026 The Concord Authors
// Licensed under the Apache License, Version 2.0 (https://www.apache.org/licenses/LICENSE-2.0)

#include "concord/aaf.hpp"

#include <algorithm>
#include <sstream>

namespace concord {

namespace {

bool valid_token(const std::string& id) {
  if (id.empty()) return false;
  for (char c : id) {
    const bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
                    (c >= '0' && c <= '9') || c == '_';
    if (!ok) return false;
  }
  return true;
}

}  // namespace

const char* to_string(Semantics semantics) {
  switch (semantics) {
    case Semantics::Grounded: return "grounded";
    case Semantics::Complete: return "complete";
    case Semantics::Preferred: return "preferred";
  }
  throw DomainError("unhandled semantics");
}

Semantics semantics_from_string(const std::string& name) {
  if (name == "grounded") return Semantics::Grounded;
  if (name == "complete") return Semantics::Complete;
  if (name == "preferred") return Semantics::Preferred;
  throw DomainError("unknown semantics '" + name +
                    "' (expected grounded, complete or preferred)");
}

const char* to_string(AcceptanceStatus status) {
  switch (status) {
    case AcceptanceStatus::Skeptical: return "skeptical";
    case AcceptanceStatus::Credulous: return "credulous";
    case AcceptanceStatus::Rejected: return "rejected";
  }
  throw DomainError("unhandled acceptance status");
}

Framework::Framework(const std::set<ArgumentId>& arguments,
                     const std::set<AttackPair>& attacks) {
  args_.assign(arguments.begin(), arguments.end());
  for (const auto& id : args_) {
    if (!valid_token(id)) {
      throw DomainError("argument name '" + id +
                        "' must be a non-empty token over [A-Za-z0-9_]");
    }
  }
  attackers_.resize(args_.size());
  targets_.resize(args_.size());
  attack_pairs_.assign(attacks.begin(), attacks.end());
  for (const auto& [from, to] : attack_pairs_) {
    const int f = index_of(from);  // throws on unknown endpoint
    const int t = index_of(to);
    targets_[f].push_back(t);
    attackers_[t].push_back(f);
  }
}

bool Framework::has_argument(const ArgumentId& id) const {
  return std::binary_search(args_.begin(), args_.end(), id);
}

bool Framework::has_attack(const ArgumentId& from, const ArgumentId& to) const {
  return std::binary_search(attack_pairs_.begin(), attack_pairs_.end(),
                            AttackPair{from, to});
}

int Framework::index_of(const ArgumentId& id) const {
  const auto it = std::lower_bound(args_.begin(), args_.end(), id);
  if (it == args_.end() || *it != id) {
    throw DomainError("unknown argument '" + id + "'");
  }
  return static_cast<int>(it - args_.begin());
}

bool Extension::contains(const ArgumentId& id) const {
  return std::binary_search(members.begin(), members.end(), id);
}

std::string Extension::str() const {
  std::ostringstream out;
  out << "{";
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (i > 0) out << ", ";
    out << members[i];
  }
  out << "}";
  return out.str();
}

bool canonical_less(const Extension& a, const Extension& b) {
  if (a.members.size() != b.members.size()) return a.members.size() < b.members.size();
  return a.members < b.members;
}

namespace {

/// Indices of `subset` in `framework`; throws on members outside it.
std::vector<int> subset_indices(const Framework& framework,
                                const std::set<ArgumentId>& subset) {
  std::vector<int> out;
  out.reserve(subset.size());
  for (const auto& id : subset) out.push_back(framework.index_of(id));
  return out;
}

std::vector<bool> subset_mask(const Framework& framework,
                              const std::set<ArgumentId>& subset) {
  std::vector<bool> mask(framework.size(), false);
  for (int i : subset_indices(framework, subset)) mask[i] = true;
  return mask;
}

bool mask_conflict_free(const Framework& framework, const std::vector<bool>& mask) {
  for (std::size_t a = 0; a < mask.size(); ++a) {
    if (!mask[a]) continue;
    for (int b : framework.targets_of(static_cast<int>(a))) {
      if (mask[b]) return false;
    }
  }
  return true;
}

bool mask_defends(const Framework& framework, const std::vector<bool>& mask, int id) {
  for (int attacker : framework.attackers_of(id)) {
    bool countered = false;
    for (int defender : framework.attackers_of(attacker)) {
      if (mask[defender]) {
        countered = true;
        break;
      }
    }
    if (!countered) return false;
  }
  return true;
}

Extension extension_from_mask(const Framework& framework, const std::vector<bool>& mask) {
  Extension e;
  for (std::size_t i = 0; i < mask.size(); ++i) {
    if (mask[i]) e.members.push_back(framework.name(static_cast<int>(i)));
  }
  return e;  // framework names are sorted, so members are too
}

}  // namespace

std::vector<ArgumentId> attackers(const Framework& framework, const ArgumentId& id) {
  std::vector<ArgumentId> out;
  for (int a : framework.attackers_of(framework.index_of(id))) {
    out.push_back(framework.name(a));
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_conflict_free(const Framework& framework, const std::set<ArgumentId>& subset) {
  return mask_conflict_free(framework, subset_mask(framework, subset));
}

bool defends(const Framework& framework, const std::set<ArgumentId>& subset,
             const ArgumentId& id) {
  return mask_defends(framework, subset_mask(framework, subset), framework.index_of(id));
}

bool is_admissible(const Framework& framework, const std::set<ArgumentId>& subset) {
  const auto mask = subset_mask(framework, subset);
  if (!mask_conflict_free(framework, mask)) return false;
  for (std::size_t a = 0; a < mask.size(); ++a) {
    if (mask[a] && !mask_defends(framework, mask, static_cast<int>(a))) return false;
  }
  return true;
}

Extension grounded_extension(const Framework& framework) {
  // Least fixpoint of "add every argument the current set defends".
  std::vector<bool> mask(framework.size(), false);
  bool grew = true;
  while (grew) {
    grew = false;
    for (std::size_t a = 0; a < mask.size(); ++a) {
      if (!mask[a] && mask_defends(framework, mask, static_cast<int>(a))) {
        mask[a] = true;
        grew = true;
      }
    }
  }
  return extension_from_mask(framework, mask);
}

namespace {

// Complete-extension enumeration over three-valued labellings.
//
// Labels: IN (accepted), OUT (attacked by an accepted argument), UND
// (neither). A total labelling is complete iff for every argument
//   IN  <=> all attackers OUT,
//   OUT <=> some attacker IN.
// The search assigns UNKNOWN slots by forced propagation first and branches
// only when nothing is forced; every leaf is re-verified against the two
// equivalences above before its IN set is recorded.
enum class Lab : unsigned char { Unknown, In, Out, Und };

class LabellingSearch {
 public:
  explicit LabellingSearch(const Framework& framework)
      : f_(framework), n_(static_cast<int>(framework.size())) {}

  std::vector<Extension> run() {
    dfs(std::vector<Lab>(n_, Lab::Unknown));
    std::vector<Extension> out;
    for (const auto& members : found_) {
      Extension e;
      for (int a : members) e.members.push_back(f_.name(a));
      out.push_back(std::move(e));
    }
    std::sort(out.begin(), out.end(), canonical_less);
    return out;
  }

 private:
  // Applies every forced deduction until a fixpoint; false on contradiction.
  // Only Unknown slots are ever (re)assigned, so labels are monotone.
  bool propagate(std::vector<Lab>& lab) const {
    bool changed = true;
    while (changed) {
      changed = false;
      for (int a = 0; a < n_; ++a) {
        const auto& atk = f_.attackers_of(a);
        int unknown = 0, in = 0, out = 0, und = 0;
        for (int b : atk) {
          switch (lab[b]) {
            case Lab::Unknown: ++unknown; break;
            case Lab::In: ++in; break;
            case Lab::Out: ++out; break;
            case Lab::Und: ++und; break;
          }
        }
        switch (lab[a]) {
          case Lab::Unknown:
            if (in > 0) {
              lab[a] = Lab::Out;
              changed = true;
            } else if (out == static_cast<int>(atk.size())) {
              lab[a] = Lab::In;
              changed = true;
            } else if (unknown == 0 && und > 0) {
              // All attackers settled as OUT/UND with at least one UND:
              // `a` can never be IN (needs all OUT) nor OUT (needs an IN).
              lab[a] = Lab::Und;
              changed = true;
            }
            break;
          case Lab::In:
            if (in > 0 || und > 0) return false;
            if (unknown > 0) {
              for (int b : atk) {
                if (lab[b] == Lab::Unknown) lab[b] = Lab::Out;
              }
              changed = true;
            }
            break;
          case Lab::Out:
            if (in == 0) {
              if (unknown == 0) return false;  // nobody left to justify OUT
              if (unknown == 1) {
                for (int b : atk) {
                  if (lab[b] == Lab::Unknown) lab[b] = Lab::In;
                }
                changed = true;
              }
            }
            break;
          case Lab::Und:
            if (in > 0) return false;
            if (unknown == 0 && und == 0) return false;  // would be forced IN
            break;
        }
      }
    }
    return true;
  }

  bool verify(const std::vector<Lab>& lab) const {
    for (int a = 0; a < n_; ++a) {
      bool any_in = false;
      bool all_out = true;
      for (int b : f_.attackers_of(a)) {
        if (lab[b] == Lab::In) any_in = true;
        if (lab[b] != Lab::Out) all_out = false;
      }
      if ((lab[a] == Lab::In) != all_out) return false;
      if ((lab[a] == Lab::Out) != any_in) return false;
    }
    return true;
  }

  void dfs(std::vector<Lab> lab) {
    if (!propagate(lab)) return;
    int pick = -1;
    for (int a = 0; a < n_; ++a) {
      if (lab[a] == Lab::Unknown) {
        pick = a;
        break;
      }
    }
    if (pick < 0) {
      if (!verify(lab)) return;
      std::vector<int> members;
      for (int a = 0; a < n_; ++a) {
        if (lab[a] == Lab::In) members.push_back(a);
      }
      found_.insert(std::move(members));
      return;
    }
    for (Lab choice : {Lab::In, Lab::Out, Lab::Und}) {
      auto branch = lab;
      branch[pick] = choice;
      dfs(std::move(branch));
    }
  }

  const Framework& f_;
  int n_;
  std::set<std::vector<int>> found_;
};

}  // namespace

std::vector<Extension> complete_extensions(const Framework& framework) {
  return LabellingSearch(framework).run();
}

std::vector<Extension> preferred_extensions(const Framework& framework) {
  const auto complete = complete_extensions(framework);
  std::vector<Extension> out;
  for (const auto& candidate : complete) {
    bool maximal = true;
    for (const auto& other : complete) {
      if (other.members.size() <= candidate.members.size()) continue;
      if (std::includes(other.members.begin(), other.members.end(),
                        candidate.members.begin(), candidate.members.end())) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.push_back(candidate);
  }
  return out;  // already in canonical order
}

std::vector<Extension> extensions(const Framework& framework, Semantics semantics) {
  switch (semantics) {
    case Semantics::Grounded: return {grounded_extension(framework)};
    case Semantics::Complete: return complete_extensions(framework);
    case Semantics::Preferred: return preferred_extensions(framework);
  }
  throw DomainError("unhandled semantics");
}

AcceptanceStatus acceptance_status(const Framework& framework, Semantics semantics,
                                   const ArgumentId& id) {
  framework.index_of(id);  // reject unknown ids up front
  const auto exts = extensions(framework, semantics);
  std::size_t holding = 0;
  for (const auto& e : exts) {
    if (e.contains(id)) ++holding;
  }
  if (holding == exts.size() && !exts.empty()) return AcceptanceStatus::Skeptical;
  if (holding > 0) return AcceptanceStatus::Credulous;
  return AcceptanceStatus::Rejected;
}

}  // namespace concord
