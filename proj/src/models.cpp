#include "pcw/models.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace pcw {

ModelClass default_model_class(Logic l) {
  switch (l) {
    case Logic::CPC: return ModelClass::TruthTable;
    case Logic::Modal: return ModelClass::ModalK;
    case Logic::Tense: return ModelClass::Tense;
    case Logic::Int: return ModelClass::Int;
    case Logic::Cond: return ModelClass::Cond;
    case Logic::BI: return ModelClass::BI;
  }
  return ModelClass::TruthTable;
}

ModelClass model_class_from_name(const std::string& name) {
  if (name == "cpc") return ModelClass::TruthTable;
  if (name == "modal") return ModelClass::ModalK;
  if (name == "s5") return ModelClass::ModalS5;
  if (name == "refleucl") return ModelClass::ReflEuclid;
  if (name == "tense") return ModelClass::Tense;
  if (name == "int") return ModelClass::Int;
  if (name == "cond") return ModelClass::Cond;
  if (name == "bi") return ModelClass::BI;
  throw std::runtime_error("unknown model class: " + name);
}

const char* model_class_name(ModelClass c) {
  switch (c) {
    case ModelClass::TruthTable: return "cpc";
    case ModelClass::ModalK: return "modal";
    case ModelClass::ModalS5: return "s5";
    case ModelClass::ReflEuclid: return "refleucl";
    case ModelClass::Tense: return "tense";
    case ModelClass::Int: return "int";
    case ModelClass::Cond: return "cond";
    case ModelClass::BI: return "bi";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Evaluation

static bool val_at(const std::map<std::string, uint32_t>& val, const std::string& atom, int w) {
  auto it = val.find(atom);
  if (it == val.end()) return false;
  return (it->second >> w) & 1u;
}

bool eval(const KripkeModel& m, int w, const Formula& f) {
  switch (f.k) {
    case Conn::Atom: return val_at(m.val, f.atom, w);
    case Conn::Top: return true;
    case Conn::Bot: return false;
    case Conn::Neg: return !eval(m, w, f.kids[0]);
    case Conn::And: return eval(m, w, f.kids[0]) && eval(m, w, f.kids[1]);
    case Conn::Or: return eval(m, w, f.kids[0]) || eval(m, w, f.kids[1]);
    case Conn::Imp: return !eval(m, w, f.kids[0]) || eval(m, w, f.kids[1]);
    case Conn::Box:
      for (int u = 0; u < m.n; ++u)
        if (m.rel_at(w, u) && !eval(m, u, f.kids[0])) return false;
      return true;
    case Conn::Dia:
      for (int u = 0; u < m.n; ++u)
        if (m.rel_at(w, u) && eval(m, u, f.kids[0])) return true;
      return false;
    case Conn::BBox:
      for (int u = 0; u < m.n; ++u)
        if (m.rel_at(u, w) && !eval(m, u, f.kids[0])) return false;
      return true;
    case Conn::BDia:
      for (int u = 0; u < m.n; ++u)
        if (m.rel_at(u, w) && eval(m, u, f.kids[0])) return true;
      return false;
    default: throw std::runtime_error("eval: connective has no Kripke clause");
  }
}

bool eval_int(const KripkeModel& m, int w, const Formula& f) {
  switch (f.k) {
    case Conn::Atom: return val_at(m.val, f.atom, w);
    case Conn::Top: return true;
    case Conn::Bot: return false;
    case Conn::And: return eval_int(m, w, f.kids[0]) && eval_int(m, w, f.kids[1]);
    case Conn::Or: return eval_int(m, w, f.kids[0]) || eval_int(m, w, f.kids[1]);
    case Conn::IImp:
      for (int u = 0; u < m.n; ++u)
        if (m.rel_at(w, u) && eval_int(m, u, f.kids[0]) && !eval_int(m, u, f.kids[1])) return false;
      return true;
    default: throw std::runtime_error("eval_int: connective outside intuitionistic language");
  }
}

bool eval(const SimpleS5Model& m, int w, const Formula& f) {
  switch (f.k) {
    case Conn::Atom: return val_at(m.val, f.atom, w);
    case Conn::Top: return true;
    case Conn::Bot: return false;
    case Conn::Neg: return !eval(m, w, f.kids[0]);
    case Conn::And: return eval(m, w, f.kids[0]) && eval(m, w, f.kids[1]);
    case Conn::Or: return eval(m, w, f.kids[0]) || eval(m, w, f.kids[1]);
    case Conn::Imp: return !eval(m, w, f.kids[0]) || eval(m, w, f.kids[1]);
    case Conn::Box:
      for (int u = 0; u < m.n; ++u)
        if (!eval(m, u, f.kids[0])) return false;
      return true;
    case Conn::Dia:
      for (int u = 0; u < m.n; ++u)
        if (eval(m, u, f.kids[0])) return true;
      return false;
    default: throw std::runtime_error("eval: connective has no simplified-S5 clause");
  }
}

bool eval(const SphereModel& m, int w, const Formula& f) {
  switch (f.k) {
    case Conn::Atom: return val_at(m.val, f.atom, w);
    case Conn::Top: return true;
    case Conn::Bot: return false;
    case Conn::Neg: return !eval(m, w, f.kids[0]);
    case Conn::And: return eval(m, w, f.kids[0]) && eval(m, w, f.kids[1]);
    case Conn::Or: return eval(m, w, f.kids[0]) || eval(m, w, f.kids[1]);
    case Conn::Imp: return !eval(m, w, f.kids[0]) || eval(m, w, f.kids[1]);
    case Conn::Prec: {
      // for all spheres alpha at w: alpha |=E B implies alpha |=E A
      for (uint32_t alpha : m.spheres[w]) {
        bool someB = false, someA = false;
        for (int u = 0; u < m.n; ++u) {
          if (!((alpha >> u) & 1u)) continue;
          someB |= eval(m, u, f.kids[1]);
          someA |= eval(m, u, f.kids[0]);
        }
        if (someB && !someA) return false;
      }
      return true;
    }
    default: throw std::runtime_error("eval: connective has no sphere clause");
  }
}

bool eval(const KripkeResourceModel& krm, int w, const Formula& f) {
  const ResourceMonoid& m = krm.m;
  switch (f.k) {
    case Conn::Atom: return val_at(krm.interp, f.atom, w);
    case Conn::Bot: return m.leq_at(m.pi, w);
    case Conn::Top: return m.leq_at(m.top, w);
    case Conn::MTop: return m.leq_at(m.e, w);
    case Conn::Star:
      for (int u = 0; u < m.n; ++u)
        for (int v = 0; v < m.n; ++v)
          if (m.leq_at(m.mul_at(u, v), w) && eval(krm, u, f.kids[0]) && eval(krm, v, f.kids[1]))
            return true;
      return false;
    case Conn::And:
      for (int u = 0; u < m.n; ++u)
        for (int v = 0; v < m.n; ++v)
          if (m.leq_at(m.add_at(u, v), w) && eval(krm, u, f.kids[0]) && eval(krm, v, f.kids[1]))
            return true;
      return false;
    case Conn::Wand:
      for (int u = 0; u < m.n; ++u) {
        if (!eval(krm, u, f.kids[0])) continue;
        for (int v = 0; v < m.n; ++v)
          if (m.leq_at(m.mul_at(w, u), v) && !eval(krm, v, f.kids[1])) return false;
      }
      return true;
    case Conn::IImp:
      for (int u = 0; u < m.n; ++u) {
        if (!eval(krm, u, f.kids[0])) continue;
        for (int v = 0; v < m.n; ++v)
          if (m.leq_at(m.add_at(w, u), v) && !eval(krm, v, f.kids[1])) return false;
      }
      return true;
    case Conn::Or: return eval(krm, w, f.kids[0]) || eval(krm, w, f.kids[1]);
    default: throw std::runtime_error("eval: connective has no resource clause");
  }
}

bool eval_tt(const std::map<std::string, bool>& v, const Formula& f) {
  switch (f.k) {
    case Conn::Atom: {
      auto it = v.find(f.atom);
      return it != v.end() && it->second;
    }
    case Conn::Top: return true;
    case Conn::Bot: return false;
    case Conn::Neg: return !eval_tt(v, f.kids[0]);
    case Conn::And: return eval_tt(v, f.kids[0]) && eval_tt(v, f.kids[1]);
    case Conn::Or: return eval_tt(v, f.kids[0]) || eval_tt(v, f.kids[1]);
    case Conn::Imp: case Conn::IImp: return !eval_tt(v, f.kids[0]) || eval_tt(v, f.kids[1]);
    default: throw std::runtime_error("eval_tt: non-propositional connective");
  }
}

bool model_valid(const KripkeModel& m, const Formula& f, bool intuitionistic) {
  for (int w = 0; w < m.n; ++w)
    if (!(intuitionistic ? eval_int(m, w, f) : eval(m, w, f))) return false;
  return true;
}

bool model_valid(const SimpleS5Model& m, const Formula& f) {
  for (int w = 0; w < m.n; ++w)
    if (!eval(m, w, f)) return false;
  return true;
}

bool model_valid(const SphereModel& m, const Formula& f) {
  for (int w = 0; w < m.n; ++w)
    if (!eval(m, w, f)) return false;
  return true;
}

bool model_valid(const KripkeResourceModel& m, const Formula& f) {
  return eval(m, m.m.e, f);
}

bool tautology(const Formula& f) {
  auto atoms = atoms_of(f);
  if (atoms.size() > 20) throw std::runtime_error("too many atoms for truth tables");
  for (uint32_t bits = 0; bits < (1u << atoms.size()); ++bits) {
    std::map<std::string, bool> v;
    for (size_t i = 0; i < atoms.size(); ++i) v[atoms[i]] = (bits >> i) & 1u;
    if (!eval_tt(v, f)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Enumeration

namespace {

// Iterate all valuations of |atoms| over n worlds.
bool for_each_valuation(const std::vector<std::string>& atoms, int n,
                        const std::function<bool(const std::map<std::string, uint32_t>&)>& fn) {
  uint64_t total = 1;
  for (size_t i = 0; i < atoms.size(); ++i) total *= (1u << n);
  for (uint64_t x = 0; x < total; ++x) {
    uint64_t t = x;
    std::map<std::string, uint32_t> val;
    for (const auto& a : atoms) {
      val[a] = static_cast<uint32_t>(t & ((1u << n) - 1));
      t >>= n;
    }
    if (!fn(val)) return false;
  }
  return true;
}

bool reflexive(const std::vector<uint8_t>& rel, int n) {
  for (int w = 0; w < n; ++w)
    if (!rel[static_cast<size_t>(w) * n + w]) return false;
  return true;
}

bool transitive(const std::vector<uint8_t>& rel, int n) {
  for (int w = 0; w < n; ++w)
    for (int v = 0; v < n; ++v)
      for (int u = 0; u < n; ++u)
        if (rel[static_cast<size_t>(w) * n + v] && rel[static_cast<size_t>(v) * n + u] &&
            !rel[static_cast<size_t>(w) * n + u])
          return false;
  return true;
}

bool euclidean(const std::vector<uint8_t>& rel, int n) {
  for (int w = 0; w < n; ++w)
    for (int v = 0; v < n; ++v)
      for (int u = 0; u < n; ++u)
        if (rel[static_cast<size_t>(w) * n + v] && rel[static_cast<size_t>(w) * n + u] &&
            !rel[static_cast<size_t>(v) * n + u])
          return false;
  return true;
}

bool persistent(const KripkeModel& m) {
  for (const auto& [atom, mask] : m.val) {
    (void)atom;
    for (int w = 0; w < m.n; ++w)
      for (int u = 0; u < m.n; ++u)
        if (m.rel_at(w, u) && ((mask >> w) & 1u) && !((mask >> u) & 1u)) return false;
  }
  return true;
}

}  // namespace

void for_each_kripke(const std::vector<std::string>& atoms, int n, ModelClass frame,
                     const std::function<bool(const KripkeModel&)>& fn) {
  int bits = n * n;
  for (uint64_t r = 0; r < (1ull << bits); ++r) {
    KripkeModel m;
    m.n = n;
    m.rel.assign(bits, 0);
    for (int i = 0; i < bits; ++i) m.rel[i] = (r >> i) & 1u;
    if (frame == ModelClass::ReflEuclid && (!reflexive(m.rel, n) || !euclidean(m.rel, n))) continue;
    if (frame == ModelClass::Int && (!reflexive(m.rel, n) || !transitive(m.rel, n))) continue;
    bool go = for_each_valuation(atoms, n, [&](const std::map<std::string, uint32_t>& val) {
      m.val = val;
      if (frame == ModelClass::Int && !persistent(m)) return true;
      return fn(m);
    });
    if (!go) return;
  }
}

void for_each_s5(const std::vector<std::string>& atoms, int n,
                 const std::function<bool(const SimpleS5Model&)>& fn) {
  SimpleS5Model m;
  m.n = n;
  for_each_valuation(atoms, n, [&](const std::map<std::string, uint32_t>& val) {
    m.val = val;
    return fn(m);
  });
}

namespace {

// All increasing chains of nonempty subsets of {0..n-1}.
void chains_from(int n, uint32_t min_super, std::vector<uint32_t>& cur,
                 std::vector<std::vector<uint32_t>>& out) {
  out.push_back(cur);
  for (uint32_t s = min_super + 1; s < (1u << n); ++s) {
    if (!cur.empty() && (s & cur.back()) != cur.back()) continue;  // must contain previous
    if (!cur.empty() && s == cur.back()) continue;
    if (s == 0) continue;
    cur.push_back(s);
    chains_from(n, s, cur, out);
    cur.pop_back();
  }
}

std::vector<std::vector<uint32_t>> all_sphere_chains(int n) {
  std::vector<std::vector<uint32_t>> out;
  std::vector<uint32_t> cur;
  chains_from(n, 0, cur, out);
  return out;
}

}  // namespace

void for_each_sphere(const std::vector<std::string>& atoms, int n,
                     const std::function<bool(const SphereModel&)>& fn) {
  auto chains = all_sphere_chains(n);
  std::vector<size_t> idx(static_cast<size_t>(n), 0);
  SphereModel m;
  m.n = n;
  m.spheres.assign(n, {});
  bool done = false;
  while (!done) {
    for (int w = 0; w < n; ++w) m.spheres[w] = chains[idx[w]];
    bool go = for_each_valuation(atoms, n, [&](const std::map<std::string, uint32_t>& val) {
      m.val = val;
      return fn(m);
    });
    if (!go) return;
    int w = 0;
    for (; w < n; ++w) {
      if (++idx[w] < chains.size()) break;
      idx[w] = 0;
    }
    done = (w == n);
  }
}

// --- resource monoids -------------------------------------------------------

namespace {

// Commutative monoids on {0..n-1} with a designated unit.
struct MonoidTables {
  int n;
  int unit;
  std::vector<int> table;
};

void fill_monoid(int n, int unit, std::vector<int>& t, int i, int j,
                 std::vector<MonoidTables>& out) {
  auto at = [&](int a, int b) -> int& { return t[static_cast<size_t>(a) * n + b]; };
  if (i == n) {
    // associativity
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          if (at(at(a, b), c) != at(a, at(b, c))) return;
    out.push_back({n, unit, t});
    return;
  }
  int ni = i, nj = j + 1;
  if (nj == n) { ni = i + 1; nj = ni; }
  if (i == unit || j == unit || j < i) {
    // determined by unit law / commutativity
    if (i == unit) at(i, j) = j;
    else if (j == unit) at(i, j) = i;
    else at(i, j) = at(j, i);
    fill_monoid(n, unit, t, ni, nj, out);
    return;
  }
  for (int v = 0; v < n; ++v) {
    at(i, j) = v;
    at(j, i) = v;
    fill_monoid(n, unit, t, ni, nj, out);
  }
}

const std::vector<MonoidTables>& monoids_with_unit(int n, int unit) {
  static std::map<std::pair<int, int>, std::vector<MonoidTables>> cache;
  auto key = std::make_pair(n, unit);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  std::vector<MonoidTables> out;
  std::vector<int> t(static_cast<size_t>(n) * n, 0);
  fill_monoid(n, unit, t, 0, 0, out);
  return cache.emplace(key, std::move(out)).first->second;
}

bool rm_axioms_ok(const ResourceMonoid& m) {
  int n = m.n;
  for (int w = 0; w < n; ++w) {
    if (!m.leq_at(w, m.pi)) return false;                     // w <= pi
    if (!m.leq_at(m.pi, m.mul_at(m.pi, w))) return false;     // pi <= pi o w
    for (int u = 0; u < n; ++u) {
      if (u == w) continue;
    }
    if (!m.leq_at(w, m.add_at(w, w))) return false;
    if (!m.leq_at(m.add_at(w, w), w)) return false;           // oплюс idempotent up to <=
  }
  for (int w = 0; w < n; ++w)
    for (int u = 0; u < n; ++u)
      if (!m.leq_at(w, m.add_at(w, u))) return false;         // w <= w (+) u
  // monotonicity
  for (int w = 0; w < n; ++w)
    for (int u = 0; u < n; ++u) {
      if (!m.leq_at(w, u)) continue;
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
          if (!m.leq_at(x, y)) continue;
          if (!m.leq_at(m.mul_at(w, x), m.mul_at(u, y))) return false;
          if (!m.leq_at(m.add_at(w, x), m.add_at(u, y))) return false;
        }
    }
  return true;
}

// Upward-closed subsets containing pi.
std::vector<uint32_t> upsets_with_pi(const ResourceMonoid& m) {
  std::vector<uint32_t> out;
  for (uint32_t s = 0; s < (1u << m.n); ++s) {
    if (!((s >> m.pi) & 1u)) continue;
    bool up = true;
    for (int w = 0; w < m.n && up; ++w)
      for (int u = 0; u < m.n && up; ++u)
        if (((s >> w) & 1u) && m.leq_at(w, u) && !((s >> u) & 1u)) up = false;
    if (up) out.push_back(s);
  }
  return out;
}

}  // namespace

void for_each_krm(const std::vector<std::string>& atoms, int n,
                  const std::function<bool(const KripkeResourceModel&)>& fn) {
  // The multiplicative unit is canonicalized to element 0 (validity is
  // invariant under isomorphism); everything else is enumerated.
  const auto& muls = monoids_with_unit(n, 0);
  int bits = n * n;
  for (int topU = 0; topU < n; ++topU) {
    const auto& adds = monoids_with_unit(n, topU);
    for (uint64_t r = 0; r < (1ull << bits); ++r) {
      std::vector<uint8_t> leq(bits, 0);
      bool refl = true;
      for (int i = 0; i < bits; ++i) leq[i] = (r >> i) & 1u;
      for (int w = 0; w < n; ++w)
        if (!leq[static_cast<size_t>(w) * n + w]) { refl = false; break; }
      if (!refl || !transitive(leq, n)) continue;
      for (int pi = 0; pi < n; ++pi) {
        for (const auto& mt : muls) {
          for (const auto& at : adds) {
            ResourceMonoid m;
            m.n = n;
            m.e = 0;
            m.top = topU;
            m.pi = pi;
            m.mul = mt.table;
            m.add = at.table;
            m.leq = leq;
            if (!rm_axioms_ok(m)) continue;
            auto upsets = upsets_with_pi(m);
            std::vector<size_t> idx(atoms.size(), 0);
            bool done = atoms.empty();
            KripkeResourceModel krm;
            krm.m = m;
            if (atoms.empty()) {
              if (!fn(krm)) return;
              continue;
            }
            while (true) {
              krm.interp.clear();
              for (size_t i = 0; i < atoms.size(); ++i) krm.interp[atoms[i]] = upsets[idx[i]];
              if (!fn(krm)) return;
              size_t i = 0;
              for (; i < atoms.size(); ++i) {
                if (++idx[i] < upsets.size()) break;
                idx[i] = 0;
              }
              if (i == atoms.size()) break;
            }
            (void)done;
          }
        }
      }
    }
  }
}

// ---------------------------------------------------------------------------
// brute_force_valid

namespace {

std::string describe_valuation(const std::map<std::string, uint32_t>& val, int n) {
  std::ostringstream os;
  for (const auto& [a, mask] : val) {
    os << "  " << a << ":";
    for (int w = 0; w < n; ++w)
      if ((mask >> w) & 1u) os << " w" << w;
    os << "\n";
  }
  return os.str();
}

CounterModel describe(const KripkeModel& m, ModelClass cls) {
  std::ostringstream os;
  os << "worlds: " << m.n << "\nrelation:\n";
  for (int w = 0; w < m.n; ++w) {
    os << "  w" << w << " ->";
    for (int u = 0; u < m.n; ++u)
      if (m.rel_at(w, u)) os << " w" << u;
    os << "\n";
  }
  os << "valuation:\n" << describe_valuation(m.val, m.n);
  return {cls, os.str(), {}};
}

CounterModel describe(const SimpleS5Model& m) {
  std::ostringstream os;
  os << "worlds: " << m.n << "\nvaluation:\n" << describe_valuation(m.val, m.n);
  return {ModelClass::ModalS5, os.str(), {}};
}

CounterModel describe(const SphereModel& m) {
  std::ostringstream os;
  os << "worlds: " << m.n << "\nspheres:\n";
  for (int w = 0; w < m.n; ++w) {
    os << "  S(w" << w << "):";
    for (uint32_t a : m.spheres[w]) {
      os << " {";
      bool first = true;
      for (int u = 0; u < m.n; ++u)
        if ((a >> u) & 1u) {
          if (!first) os << ",";
          os << "w" << u;
          first = false;
        }
      os << "}";
    }
    os << "\n";
  }
  os << "valuation:\n" << describe_valuation(m.val, m.n);
  return {ModelClass::Cond, os.str(), {}};
}

CounterModel describe(const KripkeResourceModel& krm) {
  const auto& m = krm.m;
  std::ostringstream os;
  os << "carrier: " << m.n << " (e=w" << m.e << ", top=w" << m.top << ", pi=w" << m.pi << ")\n";
  os << "mul:";
  for (int i = 0; i < m.n * m.n; ++i) os << " " << m.mul[i];
  os << "\nadd:";
  for (int i = 0; i < m.n * m.n; ++i) os << " " << m.add[i];
  os << "\nleq:";
  for (int i = 0; i < m.n * m.n; ++i) os << " " << int(m.leq[i]);
  os << "\ninterpretation:\n" << describe_valuation(krm.interp, m.n);
  return {ModelClass::BI, os.str(), {}};
}

}  // namespace

OracleVerdict brute_force_valid(const Formula& f, int bound, ModelClass cls, int max_bound) {
  if (bound < 1) throw std::invalid_argument("bound must be >= 1");
  if (bound > max_bound) throw std::invalid_argument("bound exceeds configured maximum");
  auto atoms = atoms_of(f);
  OracleVerdict verdict;
  verdict.valid = true;

  if (cls == ModelClass::TruthTable) {
    for (uint32_t bits = 0; bits < (1u << atoms.size()); ++bits) {
      std::map<std::string, bool> v;
      std::map<std::string, uint32_t> v1;
      for (size_t i = 0; i < atoms.size(); ++i) {
        v[atoms[i]] = (bits >> i) & 1u;
        v1[atoms[i]] = (bits >> i) & 1u;
      }
      if (!eval_tt(v, f)) {
        verdict.valid = false;
        verdict.countermodel = CounterModel{cls, "valuation:\n" + describe_valuation(v1, 1), {}};
        break;
      }
    }
    return verdict;
  }

  for (int n = 1; n <= bound && verdict.valid; ++n) {
    switch (cls) {
      case ModelClass::ModalK:
      case ModelClass::Tense:
      case ModelClass::ReflEuclid:
        for_each_kripke(atoms, n, cls, [&](const KripkeModel& m) {
          if (!model_valid(m, f, false)) {
            verdict.valid = false;
            verdict.countermodel = describe(m, cls);
            return false;
          }
          return true;
        });
        break;
      case ModelClass::Int:
        for_each_kripke(atoms, n, cls, [&](const KripkeModel& m) {
          if (!model_valid(m, f, true)) {
            verdict.valid = false;
            verdict.countermodel = describe(m, cls);
            return false;
          }
          return true;
        });
        break;
      case ModelClass::ModalS5:
        for_each_s5(atoms, n, [&](const SimpleS5Model& m) {
          if (!model_valid(m, f)) {
            verdict.valid = false;
            verdict.countermodel = describe(m);
            return false;
          }
          return true;
        });
        break;
      case ModelClass::Cond:
        for_each_sphere(atoms, n, [&](const SphereModel& m) {
          if (!model_valid(m, f)) {
            verdict.valid = false;
            verdict.countermodel = describe(m);
            return false;
          }
          return true;
        });
        break;
      case ModelClass::BI:
        for_each_krm(atoms, n, [&](const KripkeResourceModel& m) {
          if (!model_valid(m, f)) {
            verdict.valid = false;
            verdict.countermodel = describe(m);
            return false;
          }
          return true;
        });
        break;
      case ModelClass::TruthTable:
        break;
    }
  }
  return verdict;
}

}  // namespace pcw
