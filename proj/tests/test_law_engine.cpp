#include "doctest.h"

#include <random>
#include <sstream>

#include "pealab/classify.hpp"
#include "pealab/convert.hpp"
#include "pealab/enumerate.hpp"
#include "pealab/law.hpp"
#include "pealab/presets.hpp"
#include "pealab/term.hpp"

using namespace pealab;

TEST_CASE("parsing respects the precedence ladder") {
  Term t = parse_term("x -> y /\\ z");
  REQUIRE(t.kind == Term::Kind::Binary);
  CHECK(t.bin == BinOp::Arrow);
  CHECK(t.children[1].bin == BinOp::Meet);

  Term u = parse_term("x . y ^-");
  CHECK(u.bin == BinOp::Circ);
  CHECK(u.children[1].kind == Term::Kind::Unary);

  Term v = parse_term("x (+) y (+) z");  // left-associative chain
  CHECK(v.bin == BinOp::Oplus);
  CHECK(v.children[0].bin == BinOp::Oplus);
}

TEST_CASE("mixing operators of one level needs parentheses") {
  CHECK_THROWS_AS(parse_term("x . y * z"), SyntaxError);
  CHECK_THROWS_AS(parse_term("x /\\ y \\/ z"), SyntaxError);
  CHECK_THROWS_AS(parse_term("x (+) y \\ z"), SyntaxError);
  CHECK_NOTHROW(parse_term("(x . y) * z"));
  CHECK_NOTHROW(parse_term("x /\\ (y \\/ z)"));
}

TEST_CASE("law parsing: hypotheses, def atoms, comments") {
  Law l = parse_law("x <= y ; def(x (+) y) => x \\/ y <= 1");
  CHECK(l.hypotheses.size() == 2);
  CHECK(l.hypotheses[1].kind == Atom::Kind::Def);
  CHECK(l.conclusion.kind == Atom::Kind::Leq);
  CHECK(l.variables() == std::vector<char>{'x', 'y'});

  std::istringstream in("# comment\n\nx = x\n x ~> x = 1 # trailing\n");
  auto laws = parse_law_lines(in);
  CHECK(laws.size() == 2);

  CHECK_THROWS_AS(parse_law("x = "), SyntaxError);
  CHECK_THROWS_AS(parse_law("x <= y => "), SyntaxError);
  CHECK_THROWS_AS(parse_law("x = y = z"), SyntaxError);
}

TEST_CASE("printer output reparses to the same text") {
  std::mt19937 rng(20260823);
  auto rnd_term = [&](auto&& self, int depth) -> Term {
    int pick = std::uniform_int_distribution<int>(0, depth > 2 ? 2 : 5)(rng);
    if (pick <= 1)
      return pick == 0 ? Term::make_const(rng() % 2)
                       : Term::make_var("xyzw"[rng() % 4]);
    if (pick == 2)
      return Term::make_unary(rng() % 2 ? UnOp::ComplLeft : UnOp::ComplRight,
                              self(self, depth + 1));
    BinOp ops[] = {BinOp::Circ,      BinOp::Star, BinOp::Arrow,
                   BinOp::Squiggle,  BinOp::Oplus, BinOp::LeftDiff,
                   BinOp::RightDiff, BinOp::Meet, BinOp::Join};
    return Term::make_binary(ops[rng() % 9], self(self, depth + 1),
                             self(self, depth + 1));
  };
  for (int i = 0; i < 2000; ++i) {
    Term t = rnd_term(rnd_term, 0);
    std::string s = to_string(t);
    CHECK(to_string(parse_term(s)) == s);
  }
}

TEST_CASE("strict evaluation on the 3-chain") {
  auto m = make_law_model(make_mv3());
  Assignment a{{'x', 1}};
  CHECK(*eval_term(*m, parse_term("x (+) x"), a) == 2);
  CHECK(*eval_term(*m, parse_term("x ^-"), a) == 1);
  CHECK_FALSE(eval_term(*m, parse_term("x (+) 1"), a).has_value());
  CHECK_FALSE(eval_term(*m, parse_term("(x (+) 1) ^-"), a).has_value());
  CHECK(*eval_term(*m, parse_term("x /\\ 1"), a) == 1);
}

TEST_CASE("unsupported connectives throw instead of failing silently") {
  SearchOptions opts;
  opts.order = 6;
  for (const Pea& p : enumerate_peas(opts)) {
    if (p.is_lattice()) continue;
    auto m = make_law_model(p);
    CHECK_THROWS_AS(check_law(*m, parse_law("x /\\ y = y /\\ x")),
                    UnsupportedOperation);
    // The conditional connectives still work, just partially.
    CHECK(check_law(*m, parse_law("y <= x => def(x -> y)")).holds);
    break;
  }
}

TEST_CASE("counterexamples come lexicographically first") {
  auto m = make_law_model(make_mv3());
  LawOutcome out = check_law(*m, parse_law("x . y = x /\\ y"));
  CHECK_FALSE(out.holds);
  CHECK(out.counterexample == Assignment{{'x', 1}, {'y', 1}});
}

TEST_CASE("strong vs defined-implies-equal semantics") {
  Law comm = parse_law("x (+) y = y (+) x");
  SearchOptions opts;
  opts.order = 5;
  bool seen = false;
  for (const Pea& p : enumerate_peas(opts)) {
    auto m = make_law_model(p);
    LawOutcome strong = check_law(*m, comm, Semantics::Strong);
    if (strong.holds) continue;
    seen = true;
    CHECK(strong.counterexample == Assignment{{'x', 1}, {'y', 2}});
    // One side is undefined at every disagreement point of this model.
    CHECK(check_law(*m, comm, Semantics::DefinedImpliesEqual).holds);
  }
  CHECK(seen);
}

TEST_CASE("hypotheses require definedness") {
  auto m = make_law_model(make_mv3());
  // 1+1 is undefined, so the hypothesis filters that case out.
  CHECK(check_law(*m, parse_law("x (+) x = 1 => x <= x ^-")).holds);
}

TEST_CASE("built-in suites hold on the stock models") {
  for (const Pea& p : {make_e2(), make_mv3(), make_b4(), make_mv4()}) {
    Psa s = lpea_to_psa(p);
    Dcip d = psa_to_dcilattice(s);
    auto ms = make_law_model(s);
    auto md = make_law_model(d);
    auto mc = make_law_model(pea_to_cdcip(p));
    for (const Law& l : builtin_suite("core")) CHECK(check_law(*md, l).holds);
    for (const Law& l : builtin_suite("sasaki")) CHECK(check_law(*ms, l).holds);
    for (const Law& l : builtin_suite("optional"))
      CHECK(check_law(*md, l).holds);
    for (const Law& l : builtin_suite("cdci")) CHECK(check_law(*mc, l).holds);
  }
  CHECK(builtin_suite_names().size() == 4);
  CHECK_THROWS_AS(builtin_suite("nope"), std::invalid_argument);
}

TEST_CASE("compatibility coincides with pseudocommutation") {
  for (int order = 2; order <= 5; ++order) {
    SearchOptions opts;
    opts.order = order;
    opts.require_lattice = true;
    for (const Pea& p : enumerate_peas(opts)) {
      Psa s = lpea_to_psa(p);
      for (int a = 0; a < p.size(); ++a)
        for (int b = 0; b < p.size(); ++b)
          CHECK(compatible(p, a, b) == pseudocommute(s, a, b));
    }
  }
}

TEST_CASE("classifier on the stock models") {
  ClassifyFlags mv = classify(make_mv4());
  CHECK(mv.is_lattice);
  CHECK(mv.is_effect_algebra);
  CHECK(mv.same_complements);
  CHECK(mv.is_good);
  CHECK(*mv.is_pseudo_mv);
  CHECK(*mv.all_pairs_compatible);
  CHECK(*mv.arrow_eq_squiggle_on_leq);
  CHECK(mv.pseudo_mv_vs_compatibility_agree());

  ClassifyFlags b = classify(make_b4());
  CHECK(*b.is_pseudo_mv);
  CHECK(*b.compatible_pair_count == 6);  // all unordered pairs of 4 elements
}
