#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pcw/formula.hpp"

namespace pcw {

// Worlds are 0..n-1 throughout; valuations map atoms to bitmasks.

struct KripkeModel {
  int n = 1;
  std::vector<uint8_t> rel;  // n*n, row-major: rel[w*n+u] iff wRu
  std::map<std::string, uint32_t> val;
  bool rel_at(int w, int u) const { return rel[static_cast<size_t>(w) * n + u] != 0; }
};

struct SimpleS5Model {
  int n = 1;
  std::map<std::string, uint32_t> val;
};

struct SphereModel {
  int n = 1;
  std::vector<std::vector<uint32_t>> spheres;  // per world: an increasing chain of nonempty subsets
  std::map<std::string, uint32_t> val;
};

struct ResourceMonoid {
  int n = 1;
  int e = 0, top = 0, pi = 0;
  std::vector<int> mul, add;   // n*n tables
  std::vector<uint8_t> leq;    // n*n, leq[a*n+b] iff a <= b
  int mul_at(int a, int b) const { return mul[static_cast<size_t>(a) * n + b]; }
  int add_at(int a, int b) const { return add[static_cast<size_t>(a) * n + b]; }
  bool leq_at(int a, int b) const { return leq[static_cast<size_t>(a) * n + b] != 0; }
};

struct KripkeResourceModel {
  ResourceMonoid m;
  std::map<std::string, uint32_t> interp;  // upward closed, contains pi
};

enum class ModelClass {
  TruthTable,   // propositional
  ModalK,       // all Kripke models
  ModalS5,      // simplified S5 models
  ReflEuclid,   // Kripke models with reflexive Euclidean relation
  Tense,        // Kripke models, tense clauses
  Int,          // preorders + persistent valuations
  Cond,         // sphere models
  BI,           // Kripke resource models
};

ModelClass default_model_class(Logic l);
ModelClass model_class_from_name(const std::string& name);
const char* model_class_name(ModelClass c);

// Evaluation (pure; throws on connective/model-kind mismatch).
bool eval(const KripkeModel& m, int w, const Formula& f);        // modal + tense clauses
bool eval_int(const KripkeModel& m, int w, const Formula& f);    // intuitionistic clauses
bool eval(const SimpleS5Model& m, int w, const Formula& f);
bool eval(const SphereModel& m, int w, const Formula& f);
bool eval(const KripkeResourceModel& m, int w, const Formula& f);
bool eval_tt(const std::map<std::string, bool>& v, const Formula& f);  // truth table

bool model_valid(const KripkeModel& m, const Formula& f, bool intuitionistic);
bool model_valid(const SimpleS5Model& m, const Formula& f);
bool model_valid(const SphereModel& m, const Formula& f);
bool model_valid(const KripkeResourceModel& m, const Formula& f);  // at the unit e

// A found counter-model, pretty-printed and structured.
struct CounterModel {
  ModelClass cls;
  std::string description;          // adjacency list + valuation table
  std::map<std::string, std::string> tables;  // named raw tables for JSON output
};

struct OracleVerdict {
  bool valid = false;               // valid up to the bound
  std::optional<CounterModel> countermodel;
};

// Enumerate all models of the class with up to `bound` worlds over the atoms
// of `f`; returns the first counter-model found or valid-up-to-bound.
// Throws std::invalid_argument when bound < 1 or bound > max_bound.
OracleVerdict brute_force_valid(const Formula& f, int bound, ModelClass cls, int max_bound = 4);

// Truth-table validity for CPC formulas.
bool tautology(const Formula& f);

// Enumeration hooks (also used by property tests); fn returns false to stop.
void for_each_kripke(const std::vector<std::string>& atoms, int n, ModelClass frame,
                     const std::function<bool(const KripkeModel&)>& fn);
void for_each_s5(const std::vector<std::string>& atoms, int n,
                 const std::function<bool(const SimpleS5Model&)>& fn);
void for_each_sphere(const std::vector<std::string>& atoms, int n,
                     const std::function<bool(const SphereModel&)>& fn);
void for_each_krm(const std::vector<std::string>& atoms, int n,
                  const std::function<bool(const KripkeResourceModel&)>& fn);

}  // namespace pcw
