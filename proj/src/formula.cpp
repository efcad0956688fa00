#include "pcw/formula.hpp"

#include <algorithm>
#include <map>

namespace pcw {

const char* logic_name(Logic l) {
  switch (l) {
    case Logic::CPC: return "cpc";
    case Logic::Modal: return "modal";
    case Logic::Tense: return "tense";
    case Logic::Int: return "int";
    case Logic::Cond: return "cond";
    case Logic::BI: return "bi";
  }
  return "?";
}

Logic logic_from_name(const std::string& name) {
  if (name == "cpc") return Logic::CPC;
  if (name == "modal" || name == "s5") return Logic::Modal;
  if (name == "tense") return Logic::Tense;
  if (name == "int") return Logic::Int;
  if (name == "cond") return Logic::Cond;
  if (name == "bi") return Logic::BI;
  throw std::runtime_error("unknown logic: " + name);
}

bool Formula::operator==(const Formula& o) const {
  return k == o.k && atom == o.atom && kids == o.kids;
}

Formula fatom(std::string name) { Formula f; f.k = Conn::Atom; f.atom = std::move(name); return f; }
static Formula nullary(Conn k) { Formula f; f.k = k; return f; }
Formula ftop() { return nullary(Conn::Top); }
Formula fbot() { return nullary(Conn::Bot); }
Formula fmtop() { return nullary(Conn::MTop); }
static Formula unary(Conn k, Formula a) { Formula f; f.k = k; f.kids.push_back(std::move(a)); return f; }
Formula fneg(Formula a) { return unary(Conn::Neg, std::move(a)); }
Formula fbox(Formula a) { return unary(Conn::Box, std::move(a)); }
Formula fdia(Formula a) { return unary(Conn::Dia, std::move(a)); }
Formula fbbox(Formula a) { return unary(Conn::BBox, std::move(a)); }
Formula fbdia(Formula a) { return unary(Conn::BDia, std::move(a)); }
static Formula binary(Conn k, Formula a, Formula b) {
  Formula f; f.k = k; f.kids.push_back(std::move(a)); f.kids.push_back(std::move(b)); return f;
}
Formula fand(Formula a, Formula b) { return binary(Conn::And, std::move(a), std::move(b)); }
Formula for_(Formula a, Formula b) { return binary(Conn::Or, std::move(a), std::move(b)); }
Formula fimp(Formula a, Formula b) { return binary(Conn::Imp, std::move(a), std::move(b)); }
Formula fiimp(Formula a, Formula b) { return binary(Conn::IImp, std::move(a), std::move(b)); }
Formula fstar(Formula a, Formula b) { return binary(Conn::Star, std::move(a), std::move(b)); }
Formula fwand(Formula a, Formula b) { return binary(Conn::Wand, std::move(a), std::move(b)); }
Formula fprec(Formula a, Formula b) { return binary(Conn::Prec, std::move(a), std::move(b)); }

Formula fcond_gt(Formula a, Formula b) {
  Formula left = fprec(fbot(), a);
  Formula right = fneg(fprec(fand(a, fneg(std::move(b))), a));
  return for_(std::move(left), std::move(right));
}

int arity(Conn k) {
  switch (k) {
    case Conn::Atom: case Conn::Top: case Conn::Bot: case Conn::MTop: return 0;
    case Conn::Neg: case Conn::Box: case Conn::Dia: case Conn::BBox: case Conn::BDia: return 1;
    default: return 2;
  }
}

int cmp(const Formula& a, const Formula& b) {
  if (a.k != b.k) return a.k < b.k ? -1 : 1;
  if (a.k == Conn::Atom && a.atom != b.atom) return a.atom < b.atom ? -1 : 1;
  if (a.kids.size() != b.kids.size()) return a.kids.size() < b.kids.size() ? -1 : 1;
  for (size_t i = 0; i < a.kids.size(); ++i) {
    int c = cmp(a.kids[i], b.kids[i]);
    if (c != 0) return c;
  }
  return 0;
}

bool formula_less(const Formula& a, const Formula& b) { return cmp(a, b) < 0; }

int formula_size(const Formula& f) {
  int n = 1;
  for (const auto& k : f.kids) n += formula_size(k);
  return n;
}

void collect_atoms(const Formula& f, std::vector<std::string>& out) {
  if (f.k == Conn::Atom) {
    if (std::find(out.begin(), out.end(), f.atom) == out.end()) out.push_back(f.atom);
  }
  for (const auto& k : f.kids) collect_atoms(k, out);
}

std::vector<std::string> atoms_of(const Formula& f) {
  std::vector<std::string> v;
  collect_atoms(f, v);
  std::sort(v.begin(), v.end());
  return v;
}

// ---------------------------------------------------------------------------
// Well-formedness

std::string wff_error(const Formula& f, Logic logic) {
  auto bad = [&](const char* what) {
    return std::string(what) + " not permitted under " + logic_name(logic);
  };
  switch (f.k) {
    case Conn::Atom: return "";
    case Conn::Top:
      if (logic != Logic::BI) return bad("top");
      break;
    case Conn::Bot:
      if (logic != Logic::Int && logic != Logic::BI && logic != Logic::Cond) return bad("bot");
      break;
    case Conn::MTop:
      if (logic != Logic::BI) return bad("mtop");
      break;
    case Conn::Neg:
      if (logic == Logic::Int || logic == Logic::BI) return bad("~");
      if (logic == Logic::Tense && f.kids[0].k != Conn::Atom) return "tense negation must be on an atom";
      break;
    case Conn::Box:
      if (logic != Logic::Modal && logic != Logic::Tense) return bad("[]");
      break;
    case Conn::Dia:
      if (logic != Logic::Tense) return bad("<>");
      break;
    case Conn::BBox:
    case Conn::BDia:
      if (logic != Logic::Tense) return bad("black modality");
      break;
    case Conn::And:
      if (logic == Logic::Modal) return bad("/\\");
      break;
    case Conn::Or:
      if (logic == Logic::Modal) return bad("\\/");
      break;
    case Conn::Imp:
      if (logic != Logic::CPC && logic != Logic::Modal && logic != Logic::Cond) return bad("->");
      break;
    case Conn::IImp:
      if (logic != Logic::Int && logic != Logic::BI) return bad("=>");
      break;
    case Conn::Star:
    case Conn::Wand:
      if (logic != Logic::BI) return bad("multiplicative connective");
      break;
    case Conn::Prec:
      if (logic != Logic::Cond) return bad("=<");
      break;
  }
  for (const auto& k : f.kids) {
    std::string e = wff_error(k, logic);
    if (!e.empty()) return e;
  }
  return "";
}

bool wff(const Formula& f, Logic logic) { return wff_error(f, logic).empty(); }

// ---------------------------------------------------------------------------
// Lexer / parser

namespace {

enum class Tok {
  Ident, Top, Bot, MTop,
  Neg, Box, Dia, BBox, BDia,
  And, Or, Star,
  Imp, IImp, Wand, Prec, Gt,
  LParen, RParen, End,
};

struct Lexer {
  const std::string& s;
  size_t pos = 0;
  Tok tok = Tok::End;
  std::string ident;
  size_t tok_pos = 0;

  explicit Lexer(const std::string& text) : s(text) { advance(); }

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, tok_pos); }

  void advance() {
    while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t' || s[pos] == '\n' || s[pos] == '\r')) ++pos;
    tok_pos = pos;
    if (pos >= s.size()) { tok = Tok::End; return; }
    char c = s[pos];
    auto two = [&](char a, char b) { return c == a && pos + 1 < s.size() && s[pos + 1] == b; };
    if (two('/', '\\')) { tok = Tok::And; pos += 2; return; }
    if (two('\\', '/')) { tok = Tok::Or; pos += 2; return; }
    if (two('-', '>')) { tok = Tok::Imp; pos += 2; return; }
    if (two('-', '*')) { tok = Tok::Wand; pos += 2; return; }
    if (two('=', '>')) { tok = Tok::IImp; pos += 2; return; }
    if (two('=', '<')) { tok = Tok::Prec; pos += 2; return; }
    if (c == '>') { tok = Tok::Gt; ++pos; return; }
    if (c == '~') { tok = Tok::Neg; ++pos; return; }
    if (c == '*') { tok = Tok::Star; ++pos; return; }
    if (c == '(') { tok = Tok::LParen; ++pos; return; }
    if (c == ')') { tok = Tok::RParen; ++pos; return; }
    if (c == '[') {
      if (pos + 1 < s.size() && s[pos + 1] == ']') { tok = Tok::Box; pos += 2; return; }
      if (pos + 2 < s.size() && s[pos + 1] == 'b' && s[pos + 2] == ']') { tok = Tok::BBox; pos += 3; return; }
      throw ParseError("expected []' or [b]", pos);
    }
    if (c == '<') {
      if (pos + 1 < s.size() && s[pos + 1] == '>') { tok = Tok::Dia; pos += 2; return; }
      if (pos + 2 < s.size() && s[pos + 1] == 'b' && s[pos + 2] == '>') { tok = Tok::BDia; pos += 3; return; }
      throw ParseError("expected <> or <b>", pos);
    }
    if (isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t start = pos;
      while (pos < s.size() && (isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_')) ++pos;
      ident = s.substr(start, pos - start);
      if (ident == "top") tok = Tok::Top;
      else if (ident == "bot") tok = Tok::Bot;
      else if (ident == "mtop") tok = Tok::MTop;
      else tok = Tok::Ident;
      return;
    }
    throw ParseError(std::string("unexpected character '") + c + "'", pos);
  }
};

struct Parser {
  Lexer lx;
  Logic logic;
  bool relaxed;  // pre-NNF tense input: skip sugar, accept everything

  Parser(const std::string& text, Logic l, bool relax) : lx(text), logic(l), relaxed(relax) {}

  Formula parse() {
    Formula f = imp_level();
    if (lx.tok != Tok::End) lx.fail("trailing input");
    return f;
  }

  Formula imp_level() {
    Formula left = or_level();
    switch (lx.tok) {
      case Tok::Imp: lx.advance(); return fimp(std::move(left), imp_level());
      case Tok::IImp: lx.advance(); return fiimp(std::move(left), imp_level());
      case Tok::Wand: lx.advance(); return fwand(std::move(left), imp_level());
      case Tok::Prec: lx.advance(); return fprec(std::move(left), imp_level());
      case Tok::Gt: {
        lx.advance();
        Formula right = imp_level();
        if (relaxed) lx.fail("'>' not in the tense input language");
        if (logic == Logic::Cond) return fcond_gt(std::move(left), std::move(right));
        if (logic == Logic::Int || logic == Logic::BI) return fiimp(std::move(left), std::move(right));
        lx.fail("'>' only available under cond, int, bi");
      }
      default: return left;
    }
  }

  Formula or_level() {
    Formula f = and_level();
    while (lx.tok == Tok::Or) {
      lx.advance();
      f = for_(std::move(f), and_level());
    }
    return f;
  }

  Formula and_level() {
    Formula f = unary_level();
    while (lx.tok == Tok::And || lx.tok == Tok::Star) {
      bool star = lx.tok == Tok::Star;
      lx.advance();
      Formula rhs = unary_level();
      f = star ? fstar(std::move(f), std::move(rhs)) : fand(std::move(f), std::move(rhs));
    }
    return f;
  }

  Formula unary_level() {
    switch (lx.tok) {
      case Tok::Neg: {
        lx.advance();
        Formula a = unary_level();
        if (!relaxed && (logic == Logic::Int || logic == Logic::BI)) return fiimp(std::move(a), fbot());
        return fneg(std::move(a));
      }
      case Tok::Box: lx.advance(); return fbox(unary_level());
      case Tok::Dia: lx.advance(); return fdia(unary_level());
      case Tok::BBox: lx.advance(); return fbbox(unary_level());
      case Tok::BDia: lx.advance(); return fbdia(unary_level());
      default: return atom_level();
    }
  }

  Formula atom_level() {
    switch (lx.tok) {
      case Tok::LParen: {
        lx.advance();
        Formula f = imp_level();
        if (lx.tok != Tok::RParen) lx.fail("expected ')'");
        lx.advance();
        return f;
      }
      case Tok::Ident: { Formula f = fatom(lx.ident); lx.advance(); return f; }
      case Tok::Top: lx.advance(); return ftop();
      case Tok::Bot: lx.advance(); return fbot();
      case Tok::MTop: lx.advance(); return fmtop();
      default: lx.fail("expected a formula");
    }
  }
};

}  // namespace

Formula parse_formula(const std::string& text, Logic logic) {
  Parser p(text, logic, false);
  Formula f = p.parse();
  std::string err = wff_error(f, logic);
  if (!err.empty()) throw ParseError(err, 0);
  return f;
}

Formula parse_tense_input(const std::string& text) {
  Parser p(text, Logic::Tense, true);
  Formula f = p.parse();
  // Connective whitelist for the pre-NNF language.
  struct Check {
    static std::string run(const Formula& g) {
      switch (g.k) {
        case Conn::Atom: case Conn::Neg: case Conn::And: case Conn::Or: case Conn::Imp:
        case Conn::Box: case Conn::Dia: case Conn::BBox: case Conn::BDia:
          break;
        default:
          return "connective not in the tense input language";
      }
      for (const auto& k : g.kids) {
        std::string e = run(k);
        if (!e.empty()) return e;
      }
      return "";
    }
  };
  std::string err = Check::run(f);
  if (!err.empty()) throw ParseError(err, 0);
  return f;
}

// ---------------------------------------------------------------------------
// Printing (minimal parentheses, reparses to the same tree)

namespace {

// Precedence levels: 3 unary/atom, 2 and-level, 1 or-level, 0 implications.
int level_of(Conn k) {
  switch (k) {
    case Conn::Imp: case Conn::IImp: case Conn::Wand: case Conn::Prec: return 0;
    case Conn::Or: return 1;
    case Conn::And: case Conn::Star: return 2;
    default: return 3;
  }
}

void print_rec(const Formula& f, int min_level, bool right_of_impl, std::string& out) {
  int lv = level_of(f.k);
  bool paren = lv < min_level;
  // Implications are right associative; left operand of same level needs parens.
  if (paren) out += "(";
  switch (f.k) {
    case Conn::Atom: out += f.atom; break;
    case Conn::Top: out += "top"; break;
    case Conn::Bot: out += "bot"; break;
    case Conn::MTop: out += "mtop"; break;
    case Conn::Neg: out += "~"; print_rec(f.kids[0], 3, false, out); break;
    case Conn::Box: out += "[]"; print_rec(f.kids[0], 3, false, out); break;
    case Conn::Dia: out += "<>"; print_rec(f.kids[0], 3, false, out); break;
    case Conn::BBox: out += "[b]"; print_rec(f.kids[0], 3, false, out); break;
    case Conn::BDia: out += "<b>"; print_rec(f.kids[0], 3, false, out); break;
    case Conn::And:
    case Conn::Star: {
      print_rec(f.kids[0], 2, false, out);
      out += f.k == Conn::And ? " /\\ " : " * ";
      print_rec(f.kids[1], 3, false, out);  // left associative chain
      break;
    }
    case Conn::Or: {
      print_rec(f.kids[0], 1, false, out);
      out += " \\/ ";
      print_rec(f.kids[1], 2, false, out);
      break;
    }
    case Conn::Imp: case Conn::IImp: case Conn::Wand: case Conn::Prec: {
      print_rec(f.kids[0], 1, false, out);
      switch (f.k) {
        case Conn::Imp: out += " -> "; break;
        case Conn::IImp: out += " => "; break;
        case Conn::Wand: out += " -* "; break;
        default: out += " =< "; break;
      }
      print_rec(f.kids[1], 0, true, out);
      break;
    }
  }
  if (paren) out += ")";
  (void)right_of_impl;
}

}  // namespace

std::string print_formula(const Formula& f) {
  std::string out;
  print_rec(f, 0, false, out);
  return out;
}

// ---------------------------------------------------------------------------
// Negation normal form

static Formula nnf_pos(const Formula& f);
static Formula nnf_neg(const Formula& f);

static Formula nnf_pos(const Formula& f) {
  switch (f.k) {
    case Conn::Atom: return f;
    case Conn::Neg: return nnf_neg(f.kids[0]);
    case Conn::And: return fand(nnf_pos(f.kids[0]), nnf_pos(f.kids[1]));
    case Conn::Or: return for_(nnf_pos(f.kids[0]), nnf_pos(f.kids[1]));
    case Conn::Imp: return for_(nnf_neg(f.kids[0]), nnf_pos(f.kids[1]));
    case Conn::Box: return fbox(nnf_pos(f.kids[0]));
    case Conn::Dia: return fdia(nnf_pos(f.kids[0]));
    case Conn::BBox: return fbbox(nnf_pos(f.kids[0]));
    case Conn::BDia: return fbdia(nnf_pos(f.kids[0]));
    default: throw std::runtime_error("to_nnf: connective outside the tense input language");
  }
}

static Formula nnf_neg(const Formula& f) {
  switch (f.k) {
    case Conn::Atom: return fneg(f);
    case Conn::Neg: return nnf_pos(f.kids[0]);
    case Conn::And: return for_(nnf_neg(f.kids[0]), nnf_neg(f.kids[1]));
    case Conn::Or: return fand(nnf_neg(f.kids[0]), nnf_neg(f.kids[1]));
    case Conn::Imp: return fand(nnf_pos(f.kids[0]), nnf_neg(f.kids[1]));
    case Conn::Box: return fdia(nnf_neg(f.kids[0]));
    case Conn::Dia: return fbox(nnf_neg(f.kids[0]));
    case Conn::BBox: return fbdia(nnf_neg(f.kids[0]));
    case Conn::BDia: return fbbox(nnf_neg(f.kids[0]));
    default: throw std::runtime_error("to_nnf: connective outside the tense input language");
  }
}

Formula to_nnf(const Formula& f) { return nnf_pos(f); }

}  // namespace pcw
