#include "pcw/sequents.hpp"

#include <algorithm>
#include <cassert>

namespace pcw {

// ---------------------------------------------------------------------------
// Labels

Label lab(std::string name) { Label l; l.k = Label::Name; l.name = std::move(name); return l; }
Label lab_unit_m() { Label l; l.k = Label::UnitM; return l; }
Label lab_unit_a() { Label l; l.k = Label::UnitA; return l; }
Label lab_unit_pi() { Label l; l.k = Label::UnitPi; return l; }
static Label lab_fun(Label::Kind k, Label a, Label b) {
  Label l; l.k = k; l.args.push_back(std::move(a)); l.args.push_back(std::move(b)); return l;
}
Label lab_fun_m(Label a, Label b) { return lab_fun(Label::FunM, std::move(a), std::move(b)); }
Label lab_fun_a(Label a, Label b) { return lab_fun(Label::FunA, std::move(a), std::move(b)); }

bool label_atomic(const Label& l) { return l.k != Label::FunM && l.k != Label::FunA; }

int cmp(const Label& a, const Label& b) {
  if (a.k != b.k) return a.k < b.k ? -1 : 1;
  if (a.name != b.name) return a.name < b.name ? -1 : 1;
  if (a.args.size() != b.args.size()) return a.args.size() < b.args.size() ? -1 : 1;
  for (size_t i = 0; i < a.args.size(); ++i) {
    int c = cmp(a.args[i], b.args[i]);
    if (c != 0) return c;
  }
  return 0;
}

std::string print_label(const Label& l) {
  switch (l.k) {
    case Label::Name: return l.name;
    case Label::UnitM: return "m";
    case Label::UnitA: return "a";
    case Label::UnitPi: return "pi";
    case Label::FunM: return "m(" + print_label(l.args[0]) + ", " + print_label(l.args[1]) + ")";
    case Label::FunA: return "a(" + print_label(l.args[0]) + ", " + print_label(l.args[1]) + ")";
  }
  return "?";
}

int cmp(const RelAtom& a, const RelAtom& b) {
  if (a.k != b.k) return a.k < b.k ? -1 : 1;
  int c = cmp(a.a, b.a);
  if (c != 0) return c;
  return cmp(a.b, b.b);
}

std::string print_relatom(const RelAtom& r) {
  switch (r.k) {
    case RelAtom::Rel: return print_label(r.a) + " R " + print_label(r.b);
    case RelAtom::Le: case RelAtom::LabLe: return print_label(r.a) + " <= " + print_label(r.b);
    case RelAtom::MemIn: return print_label(r.a) + " in " + print_label(r.b);
    case RelAtom::InSph: return print_label(r.a) + " in S(" + print_label(r.b) + ")";
    case RelAtom::SubSet: return print_label(r.a) + " c= " + print_label(r.b);
  }
  return "?";
}

int cmp(const LabItem& a, const LabItem& b) {
  if (a.k != b.k) return a.k < b.k ? -1 : 1;
  int c = cmp(a.l, b.l);
  if (c != 0) return c;
  return cmp(a.f, b.f);
}

// ---------------------------------------------------------------------------
// Bunch constructors

Bunch bunch_leaf(Formula f) { Bunch b; b.k = Bunch::Leaf; b.f = std::move(f); return b; }
Bunch bunch_unit_m() { Bunch b; b.k = Bunch::UnitM; return b; }
Bunch bunch_unit_a() { Bunch b; b.k = Bunch::UnitA; return b; }
static Bunch bunch_node(Bunch::Kind k, Bunch a, Bunch b) {
  Bunch n; n.k = k; n.kids.push_back(std::move(a)); n.kids.push_back(std::move(b)); return n;
}
Bunch bunch_comma(Bunch a, Bunch b) { return bunch_node(Bunch::Comma, std::move(a), std::move(b)); }
Bunch bunch_semi(Bunch a, Bunch b) { return bunch_node(Bunch::Semi, std::move(a), std::move(b)); }

// ---------------------------------------------------------------------------
// Kind dispatch

SequentKind kind_of(const Sequent& s) {
  return static_cast<SequentKind>(s.index());
}

const char* kind_name(SequentKind k) {
  switch (k) {
    case SequentKind::Gentzen: return "gentzen";
    case SequentKind::Hyper: return "hypersequent";
    case SequentKind::NestedKt: return "nested-kt";
    case SequentKind::NestedIL: return "nested-il";
    case SequentKind::Labeled: return "labeled";
    case SequentKind::Bunched: return "bunched";
    case SequentKind::Block: return "block";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Canonicalization

static void sort_formulas(std::vector<Formula>& v) {
  std::sort(v.begin(), v.end(), formula_less);
}

GentzenSequent normal(GentzenSequent s) {
  sort_formulas(s.ante);
  sort_formulas(s.succ);
  return s;
}

static int cmp(const GentzenSequent& a, const GentzenSequent& b) {
  if (a.ante.size() != b.ante.size()) return a.ante.size() < b.ante.size() ? -1 : 1;
  if (a.succ.size() != b.succ.size()) return a.succ.size() < b.succ.size() ? -1 : 1;
  for (size_t i = 0; i < a.ante.size(); ++i) { int c = cmp(a.ante[i], b.ante[i]); if (c) return c; }
  for (size_t i = 0; i < a.succ.size(); ++i) { int c = cmp(a.succ[i], b.succ[i]); if (c) return c; }
  return 0;
}

Hypersequent normal(Hypersequent s) {
  for (auto& c : s.components) c = normal(std::move(c));
  std::sort(s.components.begin(), s.components.end(),
            [](const GentzenSequent& a, const GentzenSequent& b) { return cmp(a, b) < 0; });
  return s;
}

static int cmp(const NestedKt& a, const NestedKt& b) {
  if (a.fms.size() != b.fms.size()) return a.fms.size() < b.fms.size() ? -1 : 1;
  for (size_t i = 0; i < a.fms.size(); ++i) { int c = cmp(a.fms[i], b.fms[i]); if (c) return c; }
  if (a.kids.size() != b.kids.size()) return a.kids.size() < b.kids.size() ? -1 : 1;
  for (size_t i = 0; i < a.kids.size(); ++i) {
    if (a.kids[i].first != b.kids[i].first) return a.kids[i].first ? -1 : 1;
    int c = cmp(a.kids[i].second, b.kids[i].second);
    if (c) return c;
  }
  return 0;
}

NestedKt normal(NestedKt s) {
  sort_formulas(s.fms);
  for (auto& k : s.kids) k.second = normal(std::move(k.second));
  std::sort(s.kids.begin(), s.kids.end(),
            [](const auto& a, const auto& b) {
              if (a.first != b.first) return a.first;  // o-children before b-children
              return cmp(a.second, b.second) < 0;
            });
  return s;
}

static int cmp_content(const NestedIL& a, const NestedIL& b) {
  if (a.ante.size() != b.ante.size()) return a.ante.size() < b.ante.size() ? -1 : 1;
  if (a.succ.size() != b.succ.size()) return a.succ.size() < b.succ.size() ? -1 : 1;
  for (size_t i = 0; i < a.ante.size(); ++i) { int c = cmp(a.ante[i], b.ante[i]); if (c) return c; }
  for (size_t i = 0; i < a.succ.size(); ++i) { int c = cmp(a.succ[i], b.succ[i]); if (c) return c; }
  if (a.kids.size() != b.kids.size()) return a.kids.size() < b.kids.size() ? -1 : 1;
  for (size_t i = 0; i < a.kids.size(); ++i) { int c = cmp_content(a.kids[i], b.kids[i]); if (c) return c; }
  return 0;
}

NestedIL normal(NestedIL s) {
  sort_formulas(s.ante);
  sort_formulas(s.succ);
  for (auto& k : s.kids) k = normal(std::move(k));
  std::sort(s.kids.begin(), s.kids.end(), [](const NestedIL& a, const NestedIL& b) {
    int c = cmp_content(a, b);
    if (c) return c < 0;
    return a.label < b.label;
  });
  return s;
}

LabeledSequent normal(LabeledSequent s) {
  std::sort(s.rel.begin(), s.rel.end(), [](const RelAtom& a, const RelAtom& b) { return cmp(a, b) < 0; });
  auto less = [](const LabItem& a, const LabItem& b) { return cmp(a, b) < 0; };
  std::sort(s.ante.begin(), s.ante.end(), less);
  std::sort(s.succ.begin(), s.succ.end(), less);
  return s;
}

BunchedSequent normal(BunchedSequent s) { return s; }  // bunches are syntactic trees

static int cmp(const Block& a, const Block& b) {
  int c = cmp(a.head, b.head);
  if (c) return c;
  if (a.fms.size() != b.fms.size()) return a.fms.size() < b.fms.size() ? -1 : 1;
  for (size_t i = 0; i < a.fms.size(); ++i) { c = cmp(a.fms[i], b.fms[i]); if (c) return c; }
  return 0;
}

BlockSequent normal(BlockSequent s) {
  sort_formulas(s.ante);
  sort_formulas(s.succ);
  for (auto& b : s.blocks) sort_formulas(b.fms);
  std::sort(s.blocks.begin(), s.blocks.end(), [](const Block& a, const Block& b) { return cmp(a, b) < 0; });
  return s;
}

Sequent normal_seq(Sequent s) {
  return std::visit([](auto&& v) -> Sequent { return normal(std::move(v)); }, std::move(s));
}

void add_formula(std::vector<Formula>& v, Formula f) { ms_insert(v, std::move(f), formula_less); }
void add_item(std::vector<LabItem>& v, LabItem f) {
  ms_insert(v, std::move(f), [](const LabItem& a, const LabItem& b) { return cmp(a, b) < 0; });
}
void add_relatom(std::vector<RelAtom>& v, RelAtom r) {
  ms_insert(v, std::move(r), [](const RelAtom& a, const RelAtom& b) { return cmp(a, b) < 0; });
}

void collect_labels(const Label& l, std::vector<Label>& out) {
  if (label_atomic(l)) {
    if (!ms_contains(out, l)) out.push_back(l);
    return;
  }
  for (const auto& a : l.args) collect_labels(a, out);
}

std::vector<Label> labels_of(const LabeledSequent& s) {
  std::vector<Label> out;
  for (const auto& r : s.rel) { collect_labels(r.a, out); collect_labels(r.b, out); }
  for (const auto& i : s.ante) collect_labels(i.l, out);
  for (const auto& i : s.succ) collect_labels(i.l, out);
  return out;
}

bool label_occurs(const LabeledSequent& s, const Label& l) {
  return ms_contains(labels_of(s), l);
}

Label subst_label(const Label& l, const Label& from, const Label& to) {
  if (l == from) return to;
  Label r = l;
  for (auto& a : r.args) a = subst_label(a, from, to);
  return r;
}

LabeledSequent subst_labels(const LabeledSequent& s, const Label& from, const Label& to) {
  LabeledSequent r;
  for (const auto& x : s.rel) r.rel.push_back({x.k, subst_label(x.a, from, to), subst_label(x.b, from, to)});
  for (const auto& x : s.ante) r.ante.push_back({x.k, subst_label(x.l, from, to), x.f});
  for (const auto& x : s.succ) r.succ.push_back({x.k, subst_label(x.l, from, to), x.f});
  return normal(std::move(r));
}

// ---------------------------------------------------------------------------
// Printing

static std::string join_formulas(const std::vector<Formula>& v) {
  std::string out;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += print_formula(v[i]);
  }
  return out;
}

std::string print_gentzen(const GentzenSequent& s) {
  std::string out = join_formulas(s.ante);
  if (!s.ante.empty()) out += " ";
  out += "|-";
  if (!s.succ.empty()) out += " " + join_formulas(s.succ);
  return out;
}

static std::string print_hyper(const Hypersequent& h) {
  std::string out;
  for (size_t i = 0; i < h.components.size(); ++i) {
    if (i) out += " | ";
    out += print_gentzen(h.components[i]);
  }
  return out;
}

std::string print_nested_kt(const NestedKt& s) {
  std::string out;
  bool first = true;
  for (const auto& f : s.fms) {
    if (!first) out += ", ";
    out += print_formula(f);
    first = false;
  }
  for (const auto& [fwd, kid] : s.kids) {
    if (!first) out += ", ";
    out += fwd ? "o[" : "b[";
    out += print_nested_kt(kid);
    out += "]";
    first = false;
  }
  return out;
}

std::string print_nested_il(const NestedIL& s) {
  std::string out = join_formulas(s.ante);
  if (!s.ante.empty()) out += " ";
  out += "|-";
  bool first = true;
  for (const auto& f : s.succ) {
    out += first ? " " : ", ";
    out += print_formula(f);
    first = false;
  }
  for (const auto& kid : s.kids) {
    out += first ? " " : ", ";
    out += "[" + print_nested_il(kid) + "]_" + kid.label;
    first = false;
  }
  return out;
}

static std::string print_item(const LabItem& it) {
  return print_label(it.l) + (it.k == LabItem::At ? " : " : " :E ") + print_formula(it.f);
}

std::string print_labeled(const LabeledSequent& s) {
  std::string out;
  if (!s.rel.empty()) {
    for (size_t i = 0; i < s.rel.size(); ++i) {
      if (i) out += ", ";
      out += print_relatom(s.rel[i]);
    }
    out += " ; ";
  }
  for (size_t i = 0; i < s.ante.size(); ++i) {
    if (i) out += ", ";
    out += print_item(s.ante[i]);
  }
  if (!s.ante.empty()) out += " ";
  out += "|-";
  for (size_t i = 0; i < s.succ.size(); ++i) {
    out += i ? ", " : " ";
    out += print_item(s.succ[i]);
  }
  return out;
}

std::string print_bunch(const Bunch& b) {
  switch (b.k) {
    case Bunch::Leaf: return print_formula(b.f);
    case Bunch::UnitM: return "mI";
    case Bunch::UnitA: return "aI";
    case Bunch::Comma: return "(" + print_bunch(b.kids[0]) + " , " + print_bunch(b.kids[1]) + ")";
    case Bunch::Semi: return "(" + print_bunch(b.kids[0]) + " ; " + print_bunch(b.kids[1]) + ")";
  }
  return "?";
}

static std::string print_bunched(const BunchedSequent& s) {
  return print_bunch(s.bunch) + " |- " + print_formula(s.goal);
}

std::string print_block_sequent(const BlockSequent& s) {
  std::string out = join_formulas(s.ante);
  if (!s.ante.empty()) out += " ";
  out += "|-";
  bool first = true;
  for (const auto& f : s.succ) {
    out += first ? " " : ", ";
    out += print_formula(f);
    first = false;
  }
  for (const auto& b : s.blocks) {
    out += first ? " " : ", ";
    out += "[" + join_formulas(b.fms) + " <| " + print_formula(b.head) + "]";
    first = false;
  }
  return out;
}

std::string print_sequent(const Sequent& s) {
  switch (kind_of(s)) {
    case SequentKind::Gentzen: return print_gentzen(std::get<GentzenSequent>(s));
    case SequentKind::Hyper: return print_hyper(std::get<Hypersequent>(s));
    case SequentKind::NestedKt: return print_nested_kt(std::get<NestedKt>(s));
    case SequentKind::NestedIL: return print_nested_il(std::get<NestedIL>(s));
    case SequentKind::Labeled: return print_labeled(std::get<LabeledSequent>(s));
    case SequentKind::Bunched: return print_bunched(std::get<BunchedSequent>(s));
    case SequentKind::Block: return print_block_sequent(std::get<BlockSequent>(s));
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Sequent parsing

namespace {

// Character cursor with depth-aware scanning over (), [].
struct Cur {
  const std::string& s;
  size_t pos = 0;
  explicit Cur(const std::string& text) : s(text) {}

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos); }

  void skip_ws() {
    while (pos < s.size() && isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eof() { skip_ws(); return pos >= s.size(); }
  bool peek_lit(const std::string& lit) {
    skip_ws();
    return s.compare(pos, lit.size(), lit) == 0;
  }
  bool eat_lit(const std::string& lit) {
    if (!peek_lit(lit)) return false;
    pos += lit.size();
    return true;
  }
  void expect(const std::string& lit) {
    if (!eat_lit(lit)) fail("expected '" + lit + "'");
  }
  std::string ident() {
    skip_ws();
    size_t start = pos;
    while (pos < s.size() && (isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_')) ++pos;
    if (pos == start) fail("expected identifier");
    return s.substr(start, pos - start);
  }
  // Scan forward for the next top-level occurrence of one of `stops`
  // (single chars, with "|-" treated as a token distinct from '|').
  // Returns the index or npos; does not move pos.
  size_t find_top(const std::string& stops, size_t from) const {
    int depth = 0;
    for (size_t i = from; i < s.size(); ++i) {
      char c = s[i];
      if (c == '(' || c == '[') ++depth;
      else if (c == ')' || c == ']') --depth;
      else if (depth == 0) {
        if (c == '|' && i + 1 < s.size() && s[i + 1] == '-') {
          if (stops.find('>') != std::string::npos) return i;  // '>' encodes "|-"
          ++i;
          continue;
        }
        if (c == '|' && stops.find('|') != std::string::npos) return i;
        if (c != '|' && stops.find(c) != std::string::npos) return i;
      }
    }
    return std::string::npos;
  }
  std::string slice(size_t a, size_t b) const { return s.substr(a, b - a); }
};

std::vector<std::string> split_top(const std::string& text, char sep) {
  // Split on a top-level single-char separator (',' ';' '|'), ignoring "|-".
  std::vector<std::string> parts;
  int depth = 0;
  size_t start = 0;
  for (size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (c == '(' || c == '[') ++depth;
    else if (c == ')' || c == ']') --depth;
    else if (depth == 0) {
      if (c == '|' && i + 1 < text.size() && text[i + 1] == '-') { ++i; continue; }
      if (c == sep) {
        parts.push_back(text.substr(start, i - start));
        start = i + 1;
      }
    }
  }
  parts.push_back(text.substr(start));
  return parts;
}

std::string trim(const std::string& s) {
  size_t a = 0, b = s.size();
  while (a < b && isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

std::vector<Formula> parse_formula_list(const std::string& text, Logic logic) {
  std::vector<Formula> out;
  std::string t = trim(text);
  if (t.empty()) return out;
  for (const auto& part : split_top(t, ',')) {
    std::string p = trim(part);
    if (p.empty()) throw ParseError("empty formula in list", 0);
    out.push_back(parse_formula(p, logic));
  }
  return out;
}

std::pair<std::string, std::string> split_turnstile(const std::string& text) {
  int depth = 0;
  for (size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (c == '(' || c == '[') ++depth;
    else if (c == ')' || c == ']') --depth;
    else if (depth == 0 && c == '|' && i + 1 < text.size() && text[i + 1] == '-') {
      return {text.substr(0, i), text.substr(i + 2)};
    }
  }
  throw ParseError("expected '|-'", 0);
}

}  // namespace

GentzenSequent parse_gentzen(const std::string& text, Logic logic) {
  auto [l, r] = split_turnstile(text);
  GentzenSequent s;
  s.ante = parse_formula_list(l, logic);
  s.succ = parse_formula_list(r, logic);
  return normal(std::move(s));
}

Hypersequent parse_hypersequent(const std::string& text, Logic logic) {
  Hypersequent h;
  for (const auto& comp : split_top(text, '|')) h.components.push_back(parse_gentzen(trim(comp), logic));
  if (h.components.empty()) throw ParseError("empty hypersequent", 0);
  return normal(std::move(h));
}

static size_t matching_bracket(const std::string& s, size_t open) {
  int depth = 0;
  for (size_t i = open; i < s.size(); ++i) {
    if (s[i] == '[' || s[i] == '(') ++depth;
    else if (s[i] == ']' || s[i] == ')') {
      --depth;
      if (depth == 0) return i;
    }
  }
  throw ParseError("unbalanced bracket", open);
}

NestedKt parse_nested_kt(const std::string& text) {
  NestedKt node;
  std::string t = trim(text);
  if (t.empty()) return node;
  for (const auto& raw : split_top(t, ',')) {
    std::string item = trim(raw);
    if (item.empty()) throw ParseError("empty item in nested sequent", 0);
    if ((item[0] == 'o' || item[0] == 'b') && item.size() > 1) {
      size_t br = item.find_first_not_of(" \t", 1);
      if (br != std::string::npos && item[br] == '[') {
        size_t close = matching_bracket(item, br);
        if (trim(item.substr(close + 1)).empty()) {
          node.kids.emplace_back(item[0] == 'o', parse_nested_kt(item.substr(br + 1, close - br - 1)));
          continue;
        }
      }
    }
    node.fms.push_back(parse_formula(item, Logic::Tense));
  }
  return normal(std::move(node));
}

static NestedIL parse_nested_il_body(const std::string& text) {
  auto [l, r] = split_turnstile(text);
  NestedIL node;
  node.ante = parse_formula_list(l, Logic::Int);
  std::string rs = trim(r);
  if (!rs.empty()) {
    for (const auto& raw : split_top(rs, ',')) {
      std::string item = trim(raw);
      if (item.empty()) throw ParseError("empty item in nested sequent", 0);
      if (item[0] == '[') {
        size_t close = matching_bracket(item, 0);
        NestedIL kid = parse_nested_il_body(item.substr(1, close - 1));
        std::string tail = trim(item.substr(close + 1));
        if (tail.size() < 2 || tail[0] != '_') throw ParseError("expected _label after nesting", 0);
        kid.label = tail.substr(1);
        node.kids.push_back(std::move(kid));
      } else {
        node.succ.push_back(parse_formula(item, Logic::Int));
      }
    }
  }
  return node;
}

NestedIL parse_nested_il(const std::string& text) {
  NestedIL root = parse_nested_il_body(text);
  if (root.label.empty()) root.label = "r";
  return normal(std::move(root));
}

// --- labeled ---------------------------------------------------------------

namespace {

Label parse_bi_label(Cur& c) {
  c.skip_ws();
  std::string id = c.ident();
  if (id == "pi") return lab_unit_pi();
  if (id == "m" || id == "a") {
    if (c.peek_lit("(")) {
      c.expect("(");
      Label x = parse_bi_label(c);
      c.expect(",");
      Label y = parse_bi_label(c);
      c.expect(")");
      return id == "m" ? lab_fun_m(std::move(x), std::move(y)) : lab_fun_a(std::move(x), std::move(y));
    }
    return id == "m" ? lab_unit_m() : lab_unit_a();
  }
  return lab(id);
}

Label parse_label_for(Cur& c, LabKind lk) {
  if (lk == LabKind::BI) return parse_bi_label(c);
  return lab(c.ident());
}

RelAtom parse_relatom(const std::string& text, LabKind lk) {
  Cur c(text);
  RelAtom r;
  if (lk == LabKind::BI) {
    r.k = RelAtom::LabLe;
    r.a = parse_bi_label(c);
    c.expect("<=");
    r.b = parse_bi_label(c);
  } else {
    Label first = lab(c.ident());
    if (c.eat_lit("R")) {
      r.k = RelAtom::Rel;
      r.a = first;
      r.b = lab(c.ident());
    } else if (c.eat_lit("<=")) {
      r.k = RelAtom::Le;
      r.a = first;
      r.b = lab(c.ident());
    } else if (c.eat_lit("c=")) {
      r.k = RelAtom::SubSet;
      r.a = first;
      r.b = lab(c.ident());
    } else if (c.eat_lit("in")) {
      if (c.eat_lit("S(")) {
        r.k = RelAtom::InSph;
        r.a = first;
        r.b = lab(c.ident());
        c.expect(")");
      } else {
        r.k = RelAtom::MemIn;
        r.a = first;
        r.b = lab(c.ident());
      }
    } else {
      c.fail("expected relational atom");
    }
  }
  if (!c.eof()) c.fail("trailing input in relational atom");
  return r;
}

Logic logic_for(LabKind lk) {
  switch (lk) {
    case LabKind::Modal: return Logic::Modal;
    case LabKind::Tense: return Logic::Tense;
    case LabKind::Int: return Logic::Int;
    case LabKind::Cond: return Logic::Cond;
    case LabKind::BI: return Logic::BI;
  }
  return Logic::CPC;
}

LabItem parse_labitem(const std::string& text, LabKind lk) {
  // label : formula  |  label :E formula
  int depth = 0;
  for (size_t i = 0; i < text.size(); ++i) {
    char ch = text[i];
    if (ch == '(' || ch == '[') ++depth;
    else if (ch == ')' || ch == ']') --depth;
    else if (depth == 0 && ch == ':') {
      LabItem it;
      size_t fstart = i + 1;
      if (fstart < text.size() && text[fstart] == 'E') {
        it.k = LabItem::ForcesE;
        ++fstart;
      } else {
        it.k = LabItem::At;
      }
      Cur c(text.substr(0, i));
      it.l = parse_label_for(c, lk);
      if (!c.eof()) c.fail("trailing input in label");
      it.f = parse_formula(trim(text.substr(fstart)), logic_for(lk));
      return it;
    }
  }
  throw ParseError("expected ':' in labeled formula", 0);
}

}  // namespace

LabeledSequent parse_labeled(const std::string& text, LabKind lk) {
  LabeledSequent out;
  std::string body = text;
  // A top-level ';' before the turnstile separates relational atoms.
  Cur scan(text);
  size_t semi = scan.find_top(";", 0);
  size_t turn = scan.find_top(">", 0);  // '>' encodes "|-"
  if (turn == std::string::npos) throw ParseError("expected '|-'", 0);
  if (semi != std::string::npos && semi < turn) {
    std::string rels = trim(text.substr(0, semi));
    if (!rels.empty())
      for (const auto& part : split_top(rels, ','))
        out.rel.push_back(parse_relatom(trim(part), lk));
    body = text.substr(semi + 1);
  }
  auto [l, r] = split_turnstile(body);
  std::string ls = trim(l), rs = trim(r);
  if (!ls.empty())
    for (const auto& part : split_top(ls, ',')) out.ante.push_back(parse_labitem(trim(part), lk));
  if (!rs.empty())
    for (const auto& part : split_top(rs, ',')) out.succ.push_back(parse_labitem(trim(part), lk));
  return normal(std::move(out));
}

// --- bunches ---------------------------------------------------------------

namespace {

Bunch parse_bunch_expr(const std::string& text);

Bunch parse_bunch_term(const std::string& text) {
  std::string t = trim(text);
  if (t == "mI") return bunch_unit_m();
  if (t == "aI") return bunch_unit_a();
  // Try a formula first; fall back to a parenthesized bunch expression.
  try {
    return bunch_leaf(parse_formula(t, Logic::BI));
  } catch (const ParseError&) {
    if (!t.empty() && t.front() == '(' && matching_bracket(t, 0) == t.size() - 1)
      return parse_bunch_expr(t.substr(1, t.size() - 2));
    throw;
  }
}

Bunch parse_bunch_expr(const std::string& text) {
  std::string t = trim(text);
  // Binary split at a top-level ',' or ';'.
  int depth = 0;
  for (size_t i = 0; i < t.size(); ++i) {
    char c = t[i];
    if (c == '(' || c == '[') ++depth;
    else if (c == ')' || c == ']') --depth;
    else if (depth == 0 && (c == ',' || c == ';')) {
      Bunch l = parse_bunch_term(t.substr(0, i));
      Bunch r = parse_bunch_expr(t.substr(i + 1));
      return c == ',' ? bunch_comma(std::move(l), std::move(r)) : bunch_semi(std::move(l), std::move(r));
    }
  }
  return parse_bunch_term(t);
}

}  // namespace

BunchedSequent parse_bunched(const std::string& text) {
  auto [l, r] = split_turnstile(text);
  BunchedSequent s;
  s.bunch = parse_bunch_expr(l);
  s.goal = parse_formula(trim(r), Logic::BI);
  return s;
}

BlockSequent parse_block_sequent(const std::string& text) {
  auto [l, r] = split_turnstile(text);
  BlockSequent s;
  s.ante = parse_formula_list(l, Logic::Cond);
  std::string rs = trim(r);
  if (!rs.empty()) {
    for (const auto& raw : split_top(rs, ',')) {
      std::string item = trim(raw);
      if (item.empty()) throw ParseError("empty item in block sequent", 0);
      if (item[0] == '[') {
        size_t close = matching_bracket(item, 0);
        if (!trim(item.substr(close + 1)).empty()) throw ParseError("trailing input after block", 0);
        std::string inner = item.substr(1, close - 1);
        size_t tri = inner.find("<|");
        if (tri == std::string::npos) throw ParseError("expected '<|' in block", 0);
        Block b;
        b.fms = parse_formula_list(inner.substr(0, tri), Logic::Cond);
        b.head = parse_formula(trim(inner.substr(tri + 2)), Logic::Cond);
        s.blocks.push_back(std::move(b));
      } else {
        s.succ.push_back(parse_formula(item, Logic::Cond));
      }
    }
  }
  return normal(std::move(s));
}

// ---------------------------------------------------------------------------
// Formula interpretations

namespace {

bool contains_iimp(const Formula& f) {
  if (f.k == Conn::IImp) return true;
  for (const auto& k : f.kids)
    if (contains_iimp(k)) return true;
  return false;
}

Formula big_and(const std::vector<Formula>& v) {
  if (v.empty()) return ftop();
  Formula f = v[0];
  for (size_t i = 1; i < v.size(); ++i) f = fand(std::move(f), v[i]);
  return f;
}

Formula big_or(const std::vector<Formula>& v) {
  if (v.empty()) return fbot();
  Formula f = v[0];
  for (size_t i = 1; i < v.size(); ++i) f = for_(std::move(f), v[i]);
  return f;
}

Formula interp_gentzen(const GentzenSequent& s) {
  bool intuitionistic = false;
  for (const auto& f : s.ante) intuitionistic |= contains_iimp(f);
  for (const auto& f : s.succ) intuitionistic |= contains_iimp(f);
  Formula l = big_and(s.ante), r = big_or(s.succ);
  return intuitionistic ? fiimp(std::move(l), std::move(r)) : fimp(std::move(l), std::move(r));
}

Formula interp_nested_il(const NestedIL& s) {
  std::vector<Formula> right = s.succ;
  for (const auto& kid : s.kids) right.push_back(interp_nested_il(kid));
  return fiimp(big_and(s.ante), big_or(right));
}

}  // namespace

Formula bunch_formula(const Bunch& b) {
  switch (b.k) {
    case Bunch::Leaf: return b.f;
    case Bunch::UnitM: return fmtop();
    case Bunch::UnitA: return ftop();
    case Bunch::Comma: return fstar(bunch_formula(b.kids[0]), bunch_formula(b.kids[1]));
    case Bunch::Semi: return fand(bunch_formula(b.kids[0]), bunch_formula(b.kids[1]));
  }
  throw std::runtime_error("bad bunch");
}

Formula formula_interpretation(const Sequent& s) {
  switch (kind_of(s)) {
    case SequentKind::Gentzen:
      return interp_gentzen(std::get<GentzenSequent>(s));
    case SequentKind::Hyper: {
      const auto& h = std::get<Hypersequent>(s);
      std::vector<Formula> parts;
      for (const auto& c : h.components) parts.push_back(fbox(interp_gentzen(c)));
      return big_or(parts);
    }
    case SequentKind::NestedIL:
      return interp_nested_il(std::get<NestedIL>(s));
    case SequentKind::Block: {
      const auto& b = std::get<BlockSequent>(s);
      std::vector<Formula> right = b.succ;
      for (const auto& blk : b.blocks)
        for (const auto& a : blk.fms) right.push_back(fprec(a, blk.head));
      return fimp(big_and(b.ante), big_or(right));
    }
    case SequentKind::Bunched: {
      const auto& b = std::get<BunchedSequent>(s);
      return fiimp(bunch_formula(b.bunch), b.goal);
    }
    case SequentKind::Labeled:
      throw InterpError("labeled sequents have no formula interpretation");
    case SequentKind::NestedKt:
      throw InterpError("display (tense nested) sequents have no formula interpretation");
  }
  throw InterpError("unsupported sequent shape");
}

}  // namespace pcw
