#include "pcw/kernel.hpp"

#include <algorithm>
#include <unordered_map>

namespace pcw {

int proof_size(const Proof& p) {
  int n = 1;
  for (const auto& q : p.prem) n += proof_size(q);
  return n;
}

int proof_height(const Proof& p) {
  int h = 0;
  for (const auto& q : p.prem) h = std::max(h, proof_height(q));
  return h + 1;
}

void proof_rules(const Proof& p, std::vector<std::string>& out) {
  out.push_back(p.rule);
  for (const auto& q : p.prem) proof_rules(q, out);
}

bool proof_uses_rule(const Proof& p, const std::string& rule) {
  if (p.rule == rule) return true;
  for (const auto& q : p.prem)
    if (proof_uses_rule(q, rule)) return true;
  return false;
}

const Rule* Calculus::find_rule(const std::string& id) const {
  for (const auto& r : rules)
    if (r.id == id) return &r;
  return nullptr;
}

std::string format_path(const std::vector<int>& path) {
  std::string s = "root";
  for (int i : path) s += "." + std::to_string(i);
  return s;
}

namespace {

void check_rec(const Calculus& c, const Proof& p, std::vector<int>& path, CheckReport& rep) {
  if (kind_of(p.concl) != c.kind) {
    rep.failures.push_back({path, std::string("sequent kind mismatch: expected ") + kind_name(c.kind)});
    return;
  }
  const Rule* r = c.find_rule(p.rule);
  if (r == nullptr) {
    rep.failures.push_back({path, "rule not in calculus: " + p.rule});
  } else {
    std::vector<Sequent> prems;
    prems.reserve(p.prem.size());
    for (const auto& q : p.prem) prems.push_back(normal_seq(q.concl));
    std::string err = r->check(normal_seq(p.concl), prems);
    if (!err.empty()) rep.failures.push_back({path, "not a correct (" + p.rule + ") instance: " + err});
  }
  for (size_t i = 0; i < p.prem.size(); ++i) {
    path.push_back(static_cast<int>(i));
    check_rec(c, p.prem[i], path, rep);
    path.pop_back();
  }
}

}  // namespace

CheckReport check(const Calculus& c, const Proof& p) {
  CheckReport rep;
  std::vector<int> path;
  check_rec(c, p, path, rep);
  rep.ok = rep.failures.empty();
  return rep;
}

std::vector<Application> expansions(const Calculus& c, const Sequent& goal, FreshGen& fresh) {
  std::vector<Application> out;
  for (const auto& r : c.rules) {
    if (!r.expand) continue;
    size_t before = out.size();
    r.expand(goal, fresh, out);
    for (size_t i = before; i < out.size(); ++i) {
      out[i].rule = r.id;
      for (auto& s : out[i].premises) s = normal_seq(std::move(s));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Search

namespace {

struct Searcher {
  const Calculus& calc;
  FreshGen fresh;
  // memo: canonical sequent -> (depth it was refuted at, or proved proof)
  std::unordered_map<std::string, Proof> proved;
  std::unordered_map<std::string, int> failed_at;  // saturated-or-exhausted up to this depth
  std::unordered_map<std::string, bool> failed_open;  // true if the failure was a saturation (Open)
  std::unordered_map<std::string, Proof> failed_deriv;

  explicit Searcher(const Calculus& c) : calc(c) {}

  // Returns status; fills proof/partial.
  SearchStatus solve(const Sequent& goal, int depth, std::vector<std::string>& path,
                     Proof& out) {
    std::string key = print_sequent(goal);
    if (auto it = proved.find(key); it != proved.end()) {
      out = it->second;
      return SearchStatus::Proved;
    }
    if (auto it = failed_at.find(key); it != failed_at.end()) {
      if (failed_open[key] || it->second >= depth) {
        out = failed_deriv[key];
        return failed_open[key] ? SearchStatus::Open : SearchStatus::Exhausted;
      }
    }
    if (std::find(path.begin(), path.end(), key) != path.end()) {
      // Loop: this branch cannot make progress.
      out = Proof{kOpenLeaf, goal, {}};
      return SearchStatus::Exhausted;
    }
    if (depth <= 0) {
      out = Proof{kOpenLeaf, goal, {}};
      return SearchStatus::Exhausted;
    }

    path.push_back(key);
    SearchStatus st = solve_apps(goal, depth, path, out);
    path.pop_back();

    if (st == SearchStatus::Proved) {
      proved[key] = out;
    } else {
      failed_at[key] = depth;
      failed_open[key] = (st == SearchStatus::Open);
      failed_deriv[key] = out;
    }
    return st;
  }

  SearchStatus solve_apps(const Sequent& goal, int depth, std::vector<std::string>& path,
                          Proof& out) {
    bool exhausted_somewhere = false;
    Proof open_witness;
    bool have_open = false;

    for (const auto& rule : calc.rules) {
      if (!rule.expand) continue;
      std::vector<Application> apps;
      rule.expand(goal, fresh, apps);
      if (apps.empty()) continue;
      size_t limit = rule.invertible ? 1 : apps.size();
      for (size_t ai = 0; ai < limit; ++ai) {
        Application& app = apps[ai];
        app.rule = rule.id;
        for (auto& s : app.premises) s = normal_seq(std::move(s));
        Proof node{rule.id, goal, {}};
        SearchStatus all = SearchStatus::Proved;
        for (const auto& prem : app.premises) {
          Proof sub;
          SearchStatus st = solve(prem, depth - 1, path, sub);
          node.prem.push_back(std::move(sub));
          if (st != SearchStatus::Proved) {
            all = st;
            break;
          }
        }
        if (all == SearchStatus::Proved) {
          out = std::move(node);
          return SearchStatus::Proved;
        }
        if (all == SearchStatus::Exhausted) exhausted_somewhere = true;
        if (!have_open) {
          open_witness = std::move(node);
          have_open = true;
        }
      }
      // Committed invertible rule: no other rule is tried once one applies.
      if (rule.invertible) {
        if (have_open) {
          out = std::move(open_witness);
          return exhausted_somewhere ? SearchStatus::Exhausted : SearchStatus::Open;
        }
      }
    }

    if (!have_open) {
      // Saturated leaf: no rule applies.
      out = Proof{kOpenLeaf, goal, {}};
      return SearchStatus::Open;
    }
    out = std::move(open_witness);
    return exhausted_somewhere ? SearchStatus::Exhausted : SearchStatus::Open;
  }
};

}  // namespace

SearchResult search(const Calculus& c, const Sequent& goal, int depth) {
  Searcher s(c);
  // Avoid label clashes with user-provided goals.
  s.fresh.prefix = "w";
  Proof out;
  std::vector<std::string> path;
  SearchStatus st = s.solve(normal_seq(goal), depth, path, out);
  SearchResult res;
  res.status = st;
  res.proof = std::move(out);
  return res;
}

std::optional<CpcCountermodel> countermodel_cpc(const Proof& failed) {
  if (failed.rule == kOpenLeaf) {
    if (const auto* g = std::get_if<GentzenSequent>(&failed.concl)) {
      bool atomic = true;
      for (const auto& f : g->ante) atomic &= (f.k == Conn::Atom);
      for (const auto& f : g->succ) atomic &= (f.k == Conn::Atom);
      if (atomic) {
        bool disjoint = true;
        for (const auto& f : g->ante) disjoint &= !ms_contains(g->succ, f);
        if (disjoint) {
          CpcCountermodel cm;
          cm.leaf = *g;
          for (const auto& f : g->ante) cm.valuation[f.atom] = true;
          for (const auto& f : g->succ)
            if (!cm.valuation.count(f.atom)) cm.valuation[f.atom] = false;
          return cm;
        }
      }
    }
  }
  for (const auto& q : failed.prem) {
    auto r = countermodel_cpc(q);
    if (r) return r;
  }
  return std::nullopt;
}

}  // namespace pcw
