#include "pealab/cdcip.hpp"

#include <optional>
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

const char* law_name(CdciLaw law) {
  switch (law) {
    case CdciLaw::PseudoInvolution: return "cdci-d-pseudo-involution";
    case CdciLaw::Divisibility: return "cdci-e-divisibility";
    case CdciLaw::Associativity: return "cdci-f-associativity";
    case CdciLaw::PeaCondition: return "cdci-g-pea-condition";
  }
  return "?";
}

}  // namespace

Result<Cdcip, CheckReport> Cdcip::check(
    Poset poset, std::vector<int> circ, std::vector<int> star,
    std::vector<int> arrow, std::vector<int> squiggle,
    const std::set<CdciLaw>& optional_laws) {
  using R = Result<Cdcip, CheckReport>;
  const int n = poset.size();
  for (const auto* t : {&circ, &star, &arrow, &squiggle}) {
    if (static_cast<int>(t->size()) != n * n)
      throw std::invalid_argument("Cdcip::check: bad dimensions");
    for (int v : *t)
      if (v != kUndef && (v < 0 || v >= n))
        throw std::invalid_argument("Cdcip::check: entry out of range");
  }

  CheckReport report{"cdcip", {}};
  const int bot = poset.bottom(), top = poset.top();
  auto L = [&](int x, int y) { return poset.leq(x, y); };
  auto A = [&](int x, int y) { return arrow[x * n + y]; };
  auto Q = [&](int x, int y) { return squiggle[x * n + y]; };
  auto C = [&](int x, int y) { return circ[x * n + y]; };
  auto S = [&](int x, int y) { return star[x * n + y]; };

  // (a) domain rules, implications first since the product domains are
  // phrased through the y->0 / y~>0 columns.
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if ((A(x, y) != kUndef) != L(y, x)) {
        report.verdicts.push_back(fail("cdci-a-domain(arrow)", {x, y}));
        return R::failure(report);
      }
      if ((Q(x, y) != kUndef) != L(y, x)) {
        report.verdicts.push_back(fail("cdci-a-domain(squiggle)", {x, y}));
        return R::failure(report);
      }
    }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if ((C(x, y) != kUndef) != L(A(y, bot), x)) {
        report.verdicts.push_back(fail("cdci-a-domain(circ)", {x, y}));
        return R::failure(report);
      }
      if ((S(x, y) != kUndef) != L(Q(y, bot), x)) {
        report.verdicts.push_back(fail("cdci-a-domain(star)", {x, y}));
        return R::failure(report);
      }
    }
  report.verdicts.push_back(pass("cdci-a-domain-rules"));

  // (b) unity
  for (int x = 0; x < n; ++x)
    if (C(x, top) != x || C(top, x) != x || S(x, top) != x || S(top, x) != x) {
      report.verdicts.push_back(fail("cdci-b-unity", {x}));
      return R::failure(report);
    }
  report.verdicts.push_back(pass("cdci-b-unity"));

  // (c) conditional residuation, checked where both sides are defined.
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        if (C(x, y) != kUndef && Q(x, z) != kUndef &&
            L(C(x, y), z) != L(y, Q(x, z))) {
          report.verdicts.push_back(fail("cdci-c-residuation", {x, y, z}));
          return R::failure(report);
        }
        if (S(x, y) != kUndef && A(x, z) != kUndef &&
            L(S(x, y), z) != L(y, A(x, z))) {
          report.verdicts.push_back(fail("cdci-c-residuation", {x, y, z}));
          return R::failure(report);
        }
      }
  report.verdicts.push_back(pass("cdci-c-residuation"));

  Cdcip r(std::move(poset), std::move(circ), std::move(star),
          std::move(arrow), std::move(squiggle));
  for (CdciLaw law : optional_laws)
    report.verdicts.push_back(r.optional_law(law));
  r.report_ = report;
  return R::success(std::move(r));
}

AxiomVerdict Cdcip::optional_law(CdciLaw law) const {
  const int n = size();
  const std::string name = law_name(law);
  const int bot = poset_.bottom();
  auto L = [&](int x, int y) { return leq(x, y); };
  auto neg = [&](int a) { return compl_left(a); };
  auto til = [&](int a) { return compl_right(a); };
  auto pcirc = [&](int a, int b) -> std::optional<int> {
    if (a == kUndef || b == kUndef || circ(a, b) == kUndef)
      return std::nullopt;
    return circ(a, b);
  };
  auto pstar = [&](int a, int b) -> std::optional<int> {
    if (a == kUndef || b == kUndef || star(a, b) == kUndef)
      return std::nullopt;
    return star(a, b);
  };

  switch (law) {
    case CdciLaw::PseudoInvolution: {
      for (int a = 0; a < n; ++a)
        if (til(neg(a)) != a || neg(til(a)) != a)
          return fail(name, {a}, "not an involution pair");
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          if (L(a, b) && (!L(neg(b), neg(a)) || !L(til(b), til(a))))
            return fail(name, {a, b}, "not order-reversing");
      return pass(name);
    }
    case CdciLaw::Divisibility: {
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
          auto lhs = pcirc(y, squiggle(y, x));
          auto rhs = pstar(y, arrow(y, x));
          bool holds = lhs && rhs && *lhs == x && *rhs == x;
          if (L(x, y) != holds) return fail(name, {x, y});
        }
      return pass(name);
    }
    case CdciLaw::Associativity: {
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
          for (int z = 0; z < n; ++z) {
            auto l1 = pcirc(pcirc(x, y).value_or(kUndef), z);
            auto r1 = pcirc(x, pcirc(y, z).value_or(kUndef));
            if (l1.has_value() != r1.has_value() || (l1 && *l1 != *r1))
              return fail(name, {x, y, z}, "circ");
            auto l2 = pstar(pstar(x, y).value_or(kUndef), z);
            auto r2 = pstar(x, pstar(y, z).value_or(kUndef));
            if (l2.has_value() != r2.has_value() || (l2 && *l2 != *r2))
              return fail(name, {x, y, z}, "star");
          }
      return pass(name);
    }
    case CdciLaw::PeaCondition: {
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
          auto l = pstar(neg(y), neg(x));
          auto r = pcirc(til(x), til(y));
          std::optional<int> lv, rv;
          if (l) lv = squiggle(*l, bot);
          if (r) rv = arrow(*r, bot);
          if (lv.has_value() != rv.has_value() || (lv && *lv != *rv))
            return fail(name, {x, y});
        }
      return pass(name);
    }
  }
  throw std::logic_error("unknown cdci law");
}

}  // namespace pealab
