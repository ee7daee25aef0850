#pragma once

#include <iosfwd>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace pealab {

enum class BinOp {
  Circ,      // .
  Star,      // *
  Arrow,     // ->
  Squiggle,  // ~>
  Oplus,     // (+)
  LeftDiff,  // \   (b \ a)
  RightDiff, // /   (a / b)
  Meet,      // meet, spelled /\ in the concrete syntax
  Join,      // join, spelled \/
};

enum class UnOp {
  ComplLeft,   // ^-
  ComplRight,  // ^~
};

/// Connective expression tree. Variables are single lowercase letters,
/// constants are 0 (bottom) and 1 (top).
struct Term {
  enum class Kind { Const, Var, Unary, Binary };
  Kind kind = Kind::Const;
  int constant = 0;
  char var = 'x';
  UnOp un = UnOp::ComplLeft;
  BinOp bin = BinOp::Circ;
  std::vector<Term> children;

  static Term make_const(int c);
  static Term make_var(char v);
  static Term make_unary(UnOp op, Term t);
  static Term make_binary(BinOp op, Term l, Term r);

  /// Variables occurring, sorted, unique.
  std::vector<char> variables() const;
};

struct Atom {
  enum class Kind { Eq, Leq, Def };
  Kind kind = Kind::Eq;
  Term lhs;
  std::optional<Term> rhs;  // absent for Def
};

/// Quantified statement: hyp1 ; hyp2 ; ... => conclusion. An empty
/// hypothesis list is an unconditional law.
struct Law {
  std::vector<Atom> hypotheses;
  Atom conclusion;
  std::string source;  // original text, for reporting

  std::vector<char> variables() const;
};

class SyntaxError : public std::runtime_error {
 public:
  SyntaxError(size_t position, const std::string& expected)
      : std::runtime_error("syntax error at position " +
                           std::to_string(position) + ": expected " + expected),
        position(position),
        expected(expected) {}
  size_t position;
  std::string expected;
};

/// Grammar, loosest to tightest: law-level = and <=; -> ~>; /\ \/;
/// . * (+) \ / (left-associative, one operator per unparenthesized
/// chain); postfix ^- ^~. Mixing different operators of one level
/// without parentheses is a syntax error.
Term parse_term(std::string_view text);
Law parse_law(std::string_view text);

/// One law per line; '#' starts a comment; blank lines skipped.
std::vector<Law> parse_law_lines(std::istream& in);

std::string to_string(const Term& t);
std::string to_string(const Atom& a);
std::string to_string(const Law& l);

const char* op_symbol(BinOp op);
const char* op_symbol(UnOp op);

}  // namespace pealab
