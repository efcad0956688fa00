#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "pcw/sequents.hpp"

namespace pcw {

// Rule id used on unproven leaves of a failed/partial derivation.
inline const char* kOpenLeaf = "open";

struct Proof {
  std::string rule;
  Sequent concl;
  std::vector<Proof> prem;
};

int proof_size(const Proof& p);
int proof_height(const Proof& p);  // sequents along a maximal path; an axiom has height 1
void proof_rules(const Proof& p, std::vector<std::string>& out);
bool proof_uses_rule(const Proof& p, const std::string& rule);

// One backward rule application: the rule id plus the premises it yields.
struct Application {
  std::string rule;
  std::vector<Sequent> premises;
};

struct FreshGen {
  int n = 0;
  std::string prefix = "w";
  std::string next() { return prefix + std::to_string(n++); }
};

struct Rule {
  std::string id;
  // Search behaviour: invertible rules are committed to (first application
  // only); non-invertible ones branch over all applications.
  bool invertible = true;
  // Validate a node: conclusion + premise sequents (already canonical).
  // Returns "" when the node is a correct instance.
  std::function<std::string(const Sequent& concl, const std::vector<Sequent>& prems)> check;
  // Backward expansion; null for rules search should not apply (e.g. cut).
  std::function<void(const Sequent& goal, FreshGen& fresh, std::vector<Application>& out)> expand;
};

struct Calculus {
  std::string id;
  SequentKind kind = SequentKind::Gentzen;
  std::vector<Rule> rules;  // search tries rules in this order

  const Rule* find_rule(const std::string& id) const;
};

struct CheckFailure {
  std::vector<int> path;  // child indices from the root
  std::string reason;
};

struct CheckReport {
  bool ok = false;
  std::vector<CheckFailure> failures;
};

std::string format_path(const std::vector<int>& path);

// Verify every node of `p` against the calculus (rule known, instance
// correct, side conditions hold, leaves are axioms).
CheckReport check(const Calculus& c, const Proof& p);

enum class SearchStatus { Proved, Open, Exhausted };

struct SearchResult {
  SearchStatus status = SearchStatus::Exhausted;
  std::optional<Proof> proof;       // Proved: the proof; Open: a saturated derivation with "open" leaves
};

// Bounded backward search. `depth` bounds the derivation height (axiom = 1).
SearchResult search(const Calculus& c, const Sequent& goal, int depth);

// Enumerate all rule applications the calculus offers on `goal`.
std::vector<Application> expansions(const Calculus& c, const Sequent& goal, FreshGen& fresh);

// Counter-model extraction from a failed classical-propositional derivation:
// finds an atomic open leaf G |- D with G, D disjoint and returns the
// valuation `p true iff p in G`.
struct CpcCountermodel {
  std::map<std::string, bool> valuation;
  GentzenSequent leaf;
};
std::optional<CpcCountermodel> countermodel_cpc(const Proof& failed);

}  // namespace pcw
