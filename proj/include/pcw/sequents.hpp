#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "pcw/formula.hpp"

namespace pcw {

// ---------------------------------------------------------------------------
// Gentzen sequents and hypersequents

struct GentzenSequent {
  std::vector<Formula> ante, succ;  // kept sorted
  bool operator==(const GentzenSequent&) const = default;
};

struct Hypersequent {
  std::vector<GentzenSequent> components;  // kept sorted by print
  bool operator==(const Hypersequent&) const = default;
};

// ---------------------------------------------------------------------------
// Nested sequents

// One-sided nested sequent for the tense language; kids carry an edge
// polarity: true = forward (o), false = backward (b).
struct NestedKt {
  std::vector<Formula> fms;
  std::vector<std::pair<bool, NestedKt>> kids;
  bool operator==(const NestedKt&) const = default;
};

// Two-sided nested sequent for intuitionistic logic. Labels name nestings
// for rule addressing only; each label occurs once, the root is "r".
struct NestedIL {
  std::string label;
  std::vector<Formula> ante, succ;
  std::vector<NestedIL> kids;
  bool operator==(const NestedIL&) const = default;
};

// ---------------------------------------------------------------------------
// Labeled sequents

struct Label {
  enum Kind { Name, UnitM, UnitA, UnitPi, FunM, FunA };
  Kind k = Name;
  std::string name;          // Name
  std::vector<Label> args;   // FunM/FunA: exactly 2
  bool operator==(const Label&) const = default;
};

Label lab(std::string name);
Label lab_unit_m();
Label lab_unit_a();
Label lab_unit_pi();
Label lab_fun_m(Label a, Label b);
Label lab_fun_a(Label a, Label b);
bool label_atomic(const Label& l);   // Name or unit
int cmp(const Label& a, const Label& b);
std::string print_label(const Label& l);

struct RelAtom {
  // w R u | w <= u | x in a | a in S(x) | a c= b | l <= l' (BI constraint)
  enum Kind { Rel, Le, MemIn, InSph, SubSet, LabLe };
  Kind k = Rel;
  Label a, b;
  bool operator==(const RelAtom&) const = default;
};

int cmp(const RelAtom& a, const RelAtom& b);
std::string print_relatom(const RelAtom& r);

struct LabItem {
  enum Kind { At, ForcesE };  // l : A  |  a :E A  (exists-forcing term)
  Kind k = At;
  Label l;
  Formula f;
  bool operator==(const LabItem&) const = default;
};

int cmp(const LabItem& a, const LabItem& b);

struct LabeledSequent {
  std::vector<RelAtom> rel;
  std::vector<LabItem> ante, succ;
  bool operator==(const LabeledSequent&) const = default;
};

// Which label/atom alphabet a labeled sequent uses; drives parsing.
enum class LabKind { Modal, Tense, Int, Cond, BI };

// ---------------------------------------------------------------------------
// Bunches

struct Bunch {
  enum Kind { Leaf, UnitM, UnitA, Comma, Semi };
  Kind k = Leaf;
  Formula f;                 // Leaf
  std::vector<Bunch> kids;   // Comma/Semi: exactly 2
  bool operator==(const Bunch&) const = default;
};

Bunch bunch_leaf(Formula f);
Bunch bunch_unit_m();
Bunch bunch_unit_a();
Bunch bunch_comma(Bunch a, Bunch b);
Bunch bunch_semi(Bunch a, Bunch b);

struct BunchedSequent {
  Bunch bunch;
  Formula goal;
  bool operator==(const BunchedSequent&) const = default;
};

// ---------------------------------------------------------------------------
// Block sequents (structured conditional-logic calculus)

struct Block {
  std::vector<Formula> fms;  // sorted
  Formula head;
  bool operator==(const Block&) const = default;
};

struct BlockSequent {
  std::vector<Formula> ante, succ;  // sorted
  std::vector<Block> blocks;        // sorted by print
  bool operator==(const BlockSequent&) const = default;
};

// ---------------------------------------------------------------------------
// The sequent union

using Sequent = std::variant<GentzenSequent, Hypersequent, NestedKt, NestedIL,
                             LabeledSequent, BunchedSequent, BlockSequent>;

enum class SequentKind { Gentzen, Hyper, NestedKt, NestedIL, Labeled, Bunched, Block };

SequentKind kind_of(const Sequent& s);
const char* kind_name(SequentKind k);

// Canonicalize: sort all multisets (hypersequent components, nested children).
GentzenSequent normal(GentzenSequent s);
Hypersequent normal(Hypersequent s);
NestedKt normal(NestedKt s);
NestedIL normal(NestedIL s);
LabeledSequent normal(LabeledSequent s);
BunchedSequent normal(BunchedSequent s);
BlockSequent normal(BlockSequent s);
Sequent normal_seq(Sequent s);

std::string print_sequent(const Sequent& s);
std::string print_gentzen(const GentzenSequent& s);
std::string print_nested_kt(const NestedKt& s);
std::string print_nested_il(const NestedIL& s);
std::string print_labeled(const LabeledSequent& s);
std::string print_bunch(const Bunch& b);
std::string print_block_sequent(const BlockSequent& s);

// Parsers; `lk` selects the label alphabet for labeled sequents.
GentzenSequent parse_gentzen(const std::string& text, Logic logic);
Hypersequent parse_hypersequent(const std::string& text, Logic logic);
NestedKt parse_nested_kt(const std::string& text);
NestedIL parse_nested_il(const std::string& text);
LabeledSequent parse_labeled(const std::string& text, LabKind lk);
BunchedSequent parse_bunched(const std::string& text);
BlockSequent parse_block_sequent(const std::string& text);

// ---------------------------------------------------------------------------
// Multiset helpers over sorted vectors

template <typename T, typename Cmp>
void ms_insert(std::vector<T>& v, T x, Cmp less) {
  auto it = std::lower_bound(v.begin(), v.end(), x, less);
  v.insert(it, std::move(x));
}

template <typename T>
bool ms_erase_one(std::vector<T>& v, const T& x) {
  for (auto it = v.begin(); it != v.end(); ++it)
    if (*it == x) { v.erase(it); return true; }
  return false;
}

template <typename T>
bool ms_contains(const std::vector<T>& v, const T& x) {
  for (const auto& e : v) if (e == x) return true;
  return false;
}

template <typename T>
int ms_count(const std::vector<T>& v, const T& x) {
  int n = 0;
  for (const auto& e : v) if (e == x) ++n;
  return n;
}

// Multiset helpers specialised for formulas / items (sorted vectors).
void add_formula(std::vector<Formula>& v, Formula f);
void add_item(std::vector<LabItem>& v, LabItem f);
void add_relatom(std::vector<RelAtom>& v, RelAtom r);

// Labels occurring anywhere in a labeled sequent (atomic labels only,
// including components of compound labels).
std::vector<Label> labels_of(const LabeledSequent& s);
bool label_occurs(const LabeledSequent& s, const Label& l);
void collect_labels(const Label& l, std::vector<Label>& out);

// Label substitution a -> b everywhere.
Label subst_label(const Label& l, const Label& from, const Label& to);
LabeledSequent subst_labels(const LabeledSequent& s, const Label& from, const Label& to);

// ---------------------------------------------------------------------------
// Formula interpretations (tau / iota / Phi)

// Gentzen, hypersequent, nested (IL), block and bunched sequents have a
// formula reading; labeled and tense-nested (display) sequents do not.
struct InterpError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
Formula formula_interpretation(const Sequent& s);
Formula bunch_formula(const Bunch& b);  // Phi

}  // namespace pcw
