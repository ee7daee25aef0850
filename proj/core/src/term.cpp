#include "pealab/term.hpp"

#include <algorithm>
#include <istream>
#include <set>
#include <sstream>

namespace pealab {

Term Term::make_const(int c) {
  Term t;
  t.kind = Kind::Const;
  t.constant = c;
  return t;
}

Term Term::make_var(char v) {
  Term t;
  t.kind = Kind::Var;
  t.var = v;
  return t;
}

Term Term::make_unary(UnOp op, Term c) {
  Term t;
  t.kind = Kind::Unary;
  t.un = op;
  t.children.push_back(std::move(c));
  return t;
}

Term Term::make_binary(BinOp op, Term l, Term r) {
  Term t;
  t.kind = Kind::Binary;
  t.bin = op;
  t.children.push_back(std::move(l));
  t.children.push_back(std::move(r));
  return t;
}

namespace {

void collect_vars(const Term& t, std::set<char>& out) {
  if (t.kind == Term::Kind::Var) out.insert(t.var);
  for (const Term& c : t.children) collect_vars(c, out);
}

}  // namespace

std::vector<char> Term::variables() const {
  std::set<char> s;
  collect_vars(*this, s);
  return {s.begin(), s.end()};
}

std::vector<char> Law::variables() const {
  std::set<char> s;
  for (const Atom& a : hypotheses) {
    collect_vars(a.lhs, s);
    if (a.rhs) collect_vars(*a.rhs, s);
  }
  collect_vars(conclusion.lhs, s);
  if (conclusion.rhs) collect_vars(*conclusion.rhs, s);
  return {s.begin(), s.end()};
}

const char* op_symbol(BinOp op) {
  switch (op) {
    case BinOp::Circ: return ".";
    case BinOp::Star: return "*";
    case BinOp::Arrow: return "->";
    case BinOp::Squiggle: return "~>";
    case BinOp::Oplus: return "(+)";
    case BinOp::LeftDiff: return "\\";
    case BinOp::RightDiff: return "/";
    case BinOp::Meet: return "/\\";
    case BinOp::Join: return "\\/";
  }
  return "?";
}

const char* op_symbol(UnOp op) {
  return op == UnOp::ComplLeft ? "^-" : "^~";
}

namespace {

enum class Tok {
  End, LParen, RParen, Const0, Const1, Var, Dot, Star, Arrow, Squiggle,
  Oplus, LDiff, RDiff, Meet, Join, PostNeg, PostTil, Eq, Leq, Semi,
  Implies, Def,
};

struct Token {
  Tok kind;
  size_t pos;
  char var = 0;
};

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  size_t i = 0;
  auto rest = [&](std::string_view pat) {
    return s.substr(i, pat.size()) == pat;
  };
  while (i < s.size()) {
    char c = s[i];
    if (c == ' ' || c == '\t') { ++i; continue; }
    size_t p = i;
    if (rest("(+)")) { out.push_back({Tok::Oplus, p}); i += 3; }
    else if (rest("=>")) { out.push_back({Tok::Implies, p}); i += 2; }
    else if (rest("<=")) { out.push_back({Tok::Leq, p}); i += 2; }
    else if (rest("->")) { out.push_back({Tok::Arrow, p}); i += 2; }
    else if (rest("~>")) { out.push_back({Tok::Squiggle, p}); i += 2; }
    else if (rest("^-")) { out.push_back({Tok::PostNeg, p}); i += 2; }
    else if (rest("^~")) { out.push_back({Tok::PostTil, p}); i += 2; }
    else if (rest("/\\")) { out.push_back({Tok::Meet, p}); i += 2; }
    else if (rest("\\/")) { out.push_back({Tok::Join, p}); i += 2; }
    else if (rest("def")) { out.push_back({Tok::Def, p}); i += 3; }
    else if (c == '(') { out.push_back({Tok::LParen, p}); ++i; }
    else if (c == ')') { out.push_back({Tok::RParen, p}); ++i; }
    else if (c == '.') { out.push_back({Tok::Dot, p}); ++i; }
    else if (c == '*') { out.push_back({Tok::Star, p}); ++i; }
    else if (c == '\\') { out.push_back({Tok::LDiff, p}); ++i; }
    else if (c == '/') { out.push_back({Tok::RDiff, p}); ++i; }
    else if (c == '=') { out.push_back({Tok::Eq, p}); ++i; }
    else if (c == ';') { out.push_back({Tok::Semi, p}); ++i; }
    else if (c == '0') { out.push_back({Tok::Const0, p}); ++i; }
    else if (c == '1') { out.push_back({Tok::Const1, p}); ++i; }
    else if (c >= 'a' && c <= 'z') {
      Token t{Tok::Var, p};
      t.var = c;
      out.push_back(t);
      ++i;
    } else {
      throw SyntaxError(p, "a token");
    }
  }
  out.push_back({Tok::End, s.size()});
  return out;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : toks_(tokenize(text)) {}

  Term parse_term_all() {
    Term t = parse_impl();
    expect(Tok::End, "end of input");
    return t;
  }

  Law parse_law_all(std::string_view source) {
    Law law;
    law.source = std::string(source);
    std::vector<Atom> atoms;
    atoms.push_back(parse_atom());
    while (peek().kind == Tok::Semi) {
      next();
      atoms.push_back(parse_atom());
    }
    if (peek().kind == Tok::Implies) {
      next();
      law.hypotheses = std::move(atoms);
      law.conclusion = parse_atom();
    } else {
      if (atoms.size() != 1)
        throw SyntaxError(peek().pos, "'=>' after hypothesis list");
      law.conclusion = std::move(atoms.front());
    }
    expect(Tok::End, "end of input");
    return law;
  }

 private:
  const Token& peek() const { return toks_[i_]; }
  Token next() { return toks_[i_++]; }
  void expect(Tok k, const std::string& what) {
    if (peek().kind != k) throw SyntaxError(peek().pos, what);
    next();
  }

  Atom parse_atom() {
    if (peek().kind == Tok::Def) {
      next();
      expect(Tok::LParen, "'(' after def");
      Atom a;
      a.kind = Atom::Kind::Def;
      a.lhs = parse_impl();
      expect(Tok::RParen, "')'");
      return a;
    }
    Atom a;
    a.lhs = parse_impl();
    if (peek().kind == Tok::Eq) {
      next();
      a.kind = Atom::Kind::Eq;
      a.rhs = parse_impl();
    } else if (peek().kind == Tok::Leq) {
      next();
      a.kind = Atom::Kind::Leq;
      a.rhs = parse_impl();
    } else {
      throw SyntaxError(peek().pos, "'=' or '<='");
    }
    return a;
  }

  static std::optional<BinOp> impl_op(Tok k) {
    if (k == Tok::Arrow) return BinOp::Arrow;
    if (k == Tok::Squiggle) return BinOp::Squiggle;
    return std::nullopt;
  }

  static std::optional<BinOp> lattice_op(Tok k) {
    if (k == Tok::Meet) return BinOp::Meet;
    if (k == Tok::Join) return BinOp::Join;
    return std::nullopt;
  }

  static std::optional<BinOp> conj_op(Tok k) {
    switch (k) {
      case Tok::Dot: return BinOp::Circ;
      case Tok::Star: return BinOp::Star;
      case Tok::Oplus: return BinOp::Oplus;
      case Tok::LDiff: return BinOp::LeftDiff;
      case Tok::RDiff: return BinOp::RightDiff;
      default: return std::nullopt;
    }
  }

  // Implications: right-associative, one operator per chain.
  Term parse_impl() {
    Term lhs = parse_lattice();
    auto op = impl_op(peek().kind);
    if (!op) return lhs;
    next();
    Term rhs = parse_impl_tail(*op);
    return Term::make_binary(*op, std::move(lhs), std::move(rhs));
  }

  Term parse_impl_tail(BinOp chain) {
    Term lhs = parse_lattice();
    auto op = impl_op(peek().kind);
    if (!op) return lhs;
    if (*op != chain)
      throw SyntaxError(peek().pos,
                        "parentheses (mixed implication operators)");
    next();
    Term rhs = parse_impl_tail(chain);
    return Term::make_binary(chain, std::move(lhs), std::move(rhs));
  }

  // Lattice level: left-associative, one operator per chain.
  Term parse_lattice() {
    Term lhs = parse_conj();
    auto op = lattice_op(peek().kind);
    if (!op) return lhs;
    while (true) {
      auto cur = lattice_op(peek().kind);
      if (!cur) break;
      if (*cur != *op)
        throw SyntaxError(peek().pos, "parentheses (mixed /\\ and \\/)");
      next();
      lhs = Term::make_binary(*op, std::move(lhs), parse_conj());
    }
    return lhs;
  }

  // Conjunction level: left-associative, one operator per chain.
  Term parse_conj() {
    Term lhs = parse_postfix();
    auto op = conj_op(peek().kind);
    if (!op) return lhs;
    while (true) {
      auto cur = conj_op(peek().kind);
      if (!cur) break;
      if (*cur != *op)
        throw SyntaxError(peek().pos,
                          "parentheses (mixed product-level operators)");
      next();
      lhs = Term::make_binary(*op, std::move(lhs), parse_postfix());
    }
    return lhs;
  }

  Term parse_postfix() {
    Term t = parse_primary();
    while (peek().kind == Tok::PostNeg || peek().kind == Tok::PostTil) {
      UnOp op = next().kind == Tok::PostNeg ? UnOp::ComplLeft
                                            : UnOp::ComplRight;
      t = Term::make_unary(op, std::move(t));
    }
    return t;
  }

  Term parse_primary() {
    Token t = next();
    switch (t.kind) {
      case Tok::Const0: return Term::make_const(0);
      case Tok::Const1: return Term::make_const(1);
      case Tok::Var: return Term::make_var(t.var);
      case Tok::LParen: {
        Term inner = parse_impl();
        expect(Tok::RParen, "')'");
        return inner;
      }
      default:
        throw SyntaxError(t.pos, "a term");
    }
  }

  std::vector<Token> toks_;
  size_t i_ = 0;
};

int level_of(const Term& t) {
  // 0 primary/postfix, 1 conj, 2 lattice, 3 implication
  if (t.kind != Term::Kind::Binary) return 0;
  switch (t.bin) {
    case BinOp::Arrow: case BinOp::Squiggle: return 3;
    case BinOp::Meet: case BinOp::Join: return 2;
    default: return 1;
  }
}

bool child_needs_paren(const Term& child, const Term& parent, bool right_side) {
  if (child.kind != Term::Kind::Binary) return false;
  if (parent.kind == Term::Kind::Unary) return true;  // postfix binds tightest
  int cl = level_of(child), pl = level_of(parent);
  if (cl > pl) return true;
  if (cl < pl) return false;
  if (child.bin != parent.bin) return true;  // one operator per chain
  bool right_assoc =
      parent.bin == BinOp::Arrow || parent.bin == BinOp::Squiggle;
  return right_assoc ? !right_side : right_side;
}

void print_term(const Term& t, std::ostream& os) {
  auto emit_child = [&](const Term& c, bool right_side) {
    if (child_needs_paren(c, t, right_side)) {
      os << "(";
      print_term(c, os);
      os << ")";
    } else {
      print_term(c, os);
    }
  };
  switch (t.kind) {
    case Term::Kind::Const: os << t.constant; break;
    case Term::Kind::Var: os << t.var; break;
    case Term::Kind::Unary:
      emit_child(t.children[0], false);
      os << op_symbol(t.un);
      break;
    case Term::Kind::Binary:
      emit_child(t.children[0], false);
      os << " " << op_symbol(t.bin) << " ";
      emit_child(t.children[1], true);
      break;
  }
}

}  // namespace

Term parse_term(std::string_view text) {
  return Parser(text).parse_term_all();
}

Law parse_law(std::string_view text) {
  return Parser(text).parse_law_all(text);
}

std::vector<Law> parse_law_lines(std::istream& in) {
  std::vector<Law> laws;
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    bool blank = true;
    for (char c : line)
      if (c != ' ' && c != '\t' && c != '\r') blank = false;
    if (blank) continue;
    laws.push_back(parse_law(line));
  }
  return laws;
}

std::string to_string(const Term& t) {
  std::ostringstream os;
  print_term(t, os);
  return os.str();
}

std::string to_string(const Atom& a) {
  if (a.kind == Atom::Kind::Def) return "def(" + to_string(a.lhs) + ")";
  return to_string(a.lhs) + (a.kind == Atom::Kind::Eq ? " = " : " <= ") +
         to_string(*a.rhs);
}

std::string to_string(const Law& l) {
  std::string s;
  for (size_t i = 0; i < l.hypotheses.size(); ++i) {
    if (i) s += " ; ";
    s += to_string(l.hypotheses[i]);
  }
  if (!l.hypotheses.empty()) s += " => ";
  return s + to_string(l.conclusion);
}

}  // namespace pealab
