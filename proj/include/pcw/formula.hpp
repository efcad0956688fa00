#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace pcw {

// Logic families. Each fixes the set of connectives a well-formed formula
// may use (Tense additionally demands negation normal form).
enum class Logic { CPC, Modal, Tense, Int, Cond, BI };

const char* logic_name(Logic l);
Logic logic_from_name(const std::string& name);

enum class Conn {
  Atom,
  Top,   // additive truth
  Bot,
  MTop,  // multiplicative unit I*
  Neg,
  Box,
  Dia,
  BBox,  // every past moment
  BDia,  // some past moment
  And,
  Or,
  Imp,   // classical ->
  IImp,  // intuitionistic / additive =>
  Star,  // multiplicative conjunction
  Wand,  // multiplicative implication -*
  Prec,  // comparative plausibility =<
};

struct Formula {
  Conn k = Conn::Atom;
  std::string atom;             // Conn::Atom only
  std::vector<Formula> kids;    // 1 for unary, 2 for binary

  bool operator==(const Formula& o) const;
  bool operator!=(const Formula& o) const { return !(*this == o); }
};

// Constructors.
Formula fatom(std::string name);
Formula ftop();
Formula fbot();
Formula fmtop();
Formula fneg(Formula a);
Formula fbox(Formula a);
Formula fdia(Formula a);
Formula fbbox(Formula a);
Formula fbdia(Formula a);
Formula fand(Formula a, Formula b);
Formula for_(Formula a, Formula b);
Formula fimp(Formula a, Formula b);
Formula fiimp(Formula a, Formula b);
Formula fstar(Formula a, Formula b);
Formula fwand(Formula a, Formula b);
Formula fprec(Formula a, Formula b);

// Derived conditional A > B := (bot =< A) \/ ~(A /\ ~B =< A).
Formula fcond_gt(Formula a, Formula b);

int arity(Conn k);
// Total order used to keep multisets canonically sorted.
int cmp(const Formula& a, const Formula& b);
bool formula_less(const Formula& a, const Formula& b);

int formula_size(const Formula& f);
void collect_atoms(const Formula& f, std::vector<std::string>& out);
std::vector<std::string> atoms_of(const Formula& f);

struct ParseError : std::runtime_error {
  size_t offset;
  ParseError(const std::string& msg, size_t off)
      : std::runtime_error(msg + " (at byte " + std::to_string(off) + ")"), offset(off) {}
};

// Logic-aware well-formedness: checks every node against the logic's grammar.
// Returns an empty string when ok, otherwise a description of the offender.
std::string wff_error(const Formula& f, Logic logic);
bool wff(const Formula& f, Logic logic);

// Parse `text` under the declared logic. Applies per-logic sugar
// (~ and > under Int/BI, > under Cond) and then rejects anything outside
// the logic's grammar.
Formula parse_formula(const std::string& text, Logic logic);

// The pre-NNF tense input language: atoms, ~, \/, /\, ->, <>, [], <b>, [b].
Formula parse_tense_input(const std::string& text);

std::string print_formula(const Formula& f);

// Negation normal form for the tense language. Total on parse_tense_input output.
Formula to_nnf(const Formula& f);

}  // namespace pcw
