#include "pealab/psa.hpp"

#include <stdexcept>
#include <string>

namespace pealab {

namespace {

AxiomVerdict fail(std::string axiom, std::vector<int> witness,
                  std::string detail = {}) {
  return AxiomVerdict{std::move(axiom), false, std::move(witness),
                      std::move(detail)};
}

AxiomVerdict pass(std::string axiom) {
  return AxiomVerdict{std::move(axiom), true, {}, {}};
}

}  // namespace

Result<Psa, CheckReport> Psa::check(Poset poset, std::vector<int> circ,
                                    std::vector<int> star,
                                    std::vector<int> neg,
                                    std::vector<int> til) {
  using R = Result<Psa, CheckReport>;
  const int n = poset.size();
  if (static_cast<int>(circ.size()) != n * n ||
      static_cast<int>(star.size()) != n * n ||
      static_cast<int>(neg.size()) != n || static_cast<int>(til.size()) != n)
    throw std::invalid_argument("Psa::check: bad dimensions");
  for (int v : circ)
    if (v < 0 || v >= n) throw std::invalid_argument("Psa::check: circ entry");
  for (int v : star)
    if (v < 0 || v >= n) throw std::invalid_argument("Psa::check: star entry");
  for (int v : neg)
    if (v < 0 || v >= n) throw std::invalid_argument("Psa::check: neg entry");
  for (int v : til)
    if (v < 0 || v >= n) throw std::invalid_argument("Psa::check: til entry");

  CheckReport report{"psa", {}};
  const int bot = poset.bottom(), top = poset.top();
  auto C = [&](int a, int b) { return circ[a * n + b]; };
  auto S = [&](int a, int b) { return star[a * n + b]; };
  auto L = [&](int x, int y) { return poset.leq(x, y); };

  // (1) pseudo-involution
  {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a)
      if (til[neg[a]] != a || neg[til[a]] != a) {
        report.verdicts.push_back(fail("psa-1-pseudo-involution", {a}));
        ok = false;
      }
    if (!ok) return R::failure(report);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (L(a, b) && (!L(neg[b], neg[a]) || !L(til[b], til[a]))) {
          report.verdicts.push_back(fail("psa-1-pseudo-involution", {a, b},
                                         "complements not order-reversing"));
          return R::failure(report);
        }
    report.verdicts.push_back(pass("psa-1-pseudo-involution"));
  }

  // (2) unity
  for (int a = 0; a < n; ++a)
    if (C(a, top) != a || C(top, a) != a || S(a, top) != a || S(top, a) != a) {
      report.verdicts.push_back(fail("psa-2-unity", {a}));
      return R::failure(report);
    }
  report.verdicts.push_back(pass("psa-2-unity"));

  // (3) self-adjointness
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        if (L(C(a, b), c) != L(S(a, neg[c]), neg[b]) ||
            L(S(a, b), c) != L(C(a, til[c]), til[b])) {
          report.verdicts.push_back(fail("psa-3-self-adjointness", {a, b, c}));
          return R::failure(report);
        }
      }
  report.verdicts.push_back(pass("psa-3-self-adjointness"));

  // (4) divisibility: the two expressions agree for every pair, and bound
  // every common lower bound.
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int lhs = C(a, til[S(a, neg[b])]);
      int rhs = S(a, neg[C(a, til[b])]);
      if (lhs != rhs) {
        report.verdicts.push_back(
            fail("psa-4-divisibility", {a, b}, "two expressions differ"));
        return R::failure(report);
      }
      for (int c = 0; c < n; ++c)
        if (L(c, a) && L(c, b) && !L(c, lhs)) {
          report.verdicts.push_back(fail("psa-4-divisibility", {a, b, c}));
          return R::failure(report);
        }
    }
  report.verdicts.push_back(pass("psa-4-divisibility"));

  // (5) partial associativity
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        if (L(a, neg[b]) && L(c, C(til[a], til[b])) &&
            C(C(til[a], til[b]), til[c]) != C(til[a], C(til[b], til[c]))) {
          report.verdicts.push_back(fail("psa-5-partial-associativity", {a, b, c}));
          return R::failure(report);
        }
        if (L(b, til[a]) && L(c, S(neg[b], neg[a])) &&
            S(neg[c], S(neg[b], neg[a])) != S(S(neg[c], neg[b]), neg[a])) {
          report.verdicts.push_back(fail("psa-5-partial-associativity", {a, b, c}));
          return R::failure(report);
        }
      }
  report.verdicts.push_back(pass("psa-5-partial-associativity"));

  // (6)
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (L(a, neg[b]) && neg[C(til[a], til[b])] != til[S(neg[b], neg[a])]) {
        report.verdicts.push_back(fail("psa-6-oplus-compatibility", {a, b}));
        return R::failure(report);
      }
  report.verdicts.push_back(pass("psa-6-oplus-compatibility"));

  // Derived identities (Lemma-level consequences, asserted).
  for (int a = 0; a < n; ++a) {
    if (C(neg[a], a) != bot || C(a, til[a]) != bot || S(a, neg[a]) != bot ||
        S(til[a], a) != bot) {
      report.verdicts.push_back(fail("psa-orthogonality", {a}));
      return R::failure(report);
    }
    if (C(a, bot) != bot || C(bot, a) != bot || S(a, bot) != bot ||
        S(bot, a) != bot) {
      report.verdicts.push_back(fail("psa-zero-absorption", {a}));
      return R::failure(report);
    }
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (!L(C(a, b), a) || !L(S(a, b), a)) {
        report.verdicts.push_back(fail("psa-product-below-left", {a, b}));
        return R::failure(report);
      }
  report.verdicts.push_back(pass("psa-derived-identities"));

  return R::success(Psa(std::move(poset), std::move(circ), std::move(star),
                        std::move(neg), std::move(til)));
}

std::pair<std::vector<int>, std::vector<int>> derived_implications(
    const Psa& s) {
  const int n = s.size();
  std::vector<int> arrow(n * n), squiggle(n * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      arrow[a * n + b] = s.compl_left(s.circ(a, s.compl_right(b)));
      squiggle[a * n + b] = s.compl_right(s.star(a, s.compl_left(b)));
    }
  // Postcondition: residuation must hold; anything else is a checker bug.
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        if (s.leq(s.circ(a, b), c) != s.leq(b, squiggle[a * n + c]) ||
            s.leq(s.star(a, b), c) != s.leq(b, arrow[a * n + c]))
          throw std::logic_error("derived_implications: ResiduationBroken(" +
                                 std::to_string(a) + "," + std::to_string(b) +
                                 "," + std::to_string(c) + ")");
      }
  return {std::move(arrow), std::move(squiggle)};
}

}  // namespace pealab
