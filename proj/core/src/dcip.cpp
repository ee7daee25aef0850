#include "pealab/dcip.hpp"

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

std::optional<int> sup_of(const Poset& p, const std::vector<int>& xs) {
  std::optional<int> s;
  for (int z = 0; z < p.size(); ++z) {
    bool ub = true;
    for (int x : xs)
      if (!p.leq(x, z)) ub = false;
    if (!ub) continue;
    if (!s || p.leq(z, *s)) s = z;
  }
  if (!s) return std::nullopt;
  for (int z = 0; z < p.size(); ++z) {
    bool ub = true;
    for (int x : xs)
      if (!p.leq(x, z)) ub = false;
    if (ub && !p.leq(*s, z)) return std::nullopt;
  }
  return s;
}

std::optional<int> inf_of(const Poset& p, const std::vector<int>& xs) {
  std::optional<int> s;
  for (int z = 0; z < p.size(); ++z) {
    bool lb = true;
    for (int x : xs)
      if (!p.leq(z, x)) lb = false;
    if (!lb) continue;
    if (!s || p.leq(*s, z)) s = z;
  }
  if (!s) return std::nullopt;
  for (int z = 0; z < p.size(); ++z) {
    bool lb = true;
    for (int x : xs)
      if (!p.leq(z, x)) lb = false;
    if (lb && !p.leq(z, *s)) return std::nullopt;
  }
  return s;
}

const char* law_name(OptionalLaw law) {
  switch (law) {
    case OptionalLaw::PseudoInvolution: return "opt-pseudo-involution";
    case OptionalLaw::Divisibility: return "opt-divisibility";
    case OptionalLaw::OrthoExchange: return "opt-ortho-exchange";
    case OptionalLaw::SelfAdjointness: return "opt-self-adjointness";
    case OptionalLaw::SelfAdjointnessPrinted:
      return "opt-self-adjointness-printed";
  }
  return "?";
}

}  // namespace

Result<Dcip, CheckReport> Dcip::check(
    Poset poset, std::vector<int> circ, std::vector<int> star,
    std::vector<int> arrow, std::vector<int> squiggle,
    const std::set<OptionalLaw>& optional_laws) {
  using R = Result<Dcip, CheckReport>;
  const int n = poset.size();
  for (const auto* t : {&circ, &star, &arrow, &squiggle}) {
    if (static_cast<int>(t->size()) != n * n)
      throw std::invalid_argument("Dcip::check: bad dimensions");
    for (int v : *t)
      if (v < 0 || v >= n)
        throw std::invalid_argument("Dcip::check: entry out of range");
  }

  CheckReport report{"dcip", {}};
  const int top = poset.top();
  auto C = [&](int a, int b) { return circ[a * n + b]; };
  auto S = [&](int a, int b) { return star[a * n + b]; };
  auto A = [&](int a, int b) { return arrow[a * n + b]; };
  auto Q = [&](int a, int b) { return squiggle[a * n + b]; };
  auto L = [&](int x, int y) { return poset.leq(x, y); };

  // (1) unity
  for (int a = 0; a < n; ++a)
    if (C(top, a) != a || C(a, top) != a || S(top, a) != a || S(a, top) != a) {
      report.verdicts.push_back(fail("dcip-1-unity", {a}));
      return R::failure(report);
    }
  report.verdicts.push_back(pass("dcip-1-unity"));

  // (2) residuation
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (L(C(a, b), c) != L(b, Q(a, c)) || L(S(a, b), c) != L(b, A(a, c))) {
          report.verdicts.push_back(fail("dcip-2-residuation", {a, b, c}));
          return R::failure(report);
        }
  report.verdicts.push_back(pass("dcip-2-residuation"));

  // Deduction law (consequence, asserted): a<=b iff a->b=1 iff a~>b=1.
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (L(a, b) != (A(a, b) == top) || L(a, b) != (Q(a, b) == top)) {
        report.verdicts.push_back(fail("dcip-deduction-law", {a, b}));
        return R::failure(report);
      }
  report.verdicts.push_back(pass("dcip-deduction-law"));

  Dcip d(std::move(poset), std::move(circ), std::move(star), std::move(arrow),
         std::move(squiggle));
  for (OptionalLaw law : optional_laws)
    report.verdicts.push_back(d.optional_law(law));
  d.report_ = report;
  return R::success(std::move(d));
}

AxiomVerdict Dcip::optional_law(OptionalLaw law) const {
  const int n = size();
  const std::string name = law_name(law);
  auto neg = [&](int a) { return compl_left(a); };
  auto til = [&](int a) { return compl_right(a); };
  auto L = [&](int x, int y) { return leq(x, y); };
  const int bot = poset_.bottom();

  switch (law) {
    case OptionalLaw::PseudoInvolution: {
      for (int a = 0; a < n; ++a)
        if (til(neg(a)) != a || neg(til(a)) != a)
          return fail(name, {a}, "not an involution pair");
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          if (L(a, b) && (!L(neg(b), neg(a)) || !L(til(b), til(a))))
            return fail(name, {a, b}, "not order-reversing");
      return pass(name);
    }
    case OptionalLaw::Divisibility: {
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
          int e1 = circ(a, squiggle(a, b));
          int e2 = star(a, arrow(a, b));
          if (e1 != e2) return fail(name, {a, b}, "a.(a~>b) != a*(a->b)");
          for (int c = 0; c < n; ++c)
            if ((L(c, a) && L(c, b)) != L(c, e1))
              return fail(name, {a, b, c});
        }
      return pass(name);
    }
    case OptionalLaw::OrthoExchange: {
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          for (int c = 0; c < n; ++c) {
            if (circ(neg(a), neg(b)) == bot && L(til(c), circ(a, b)) &&
                !L(neg(b), star(a, c)))
              return fail(name, {a, b, c});
            if (star(til(a), til(b)) == bot && L(neg(c), star(a, b)) &&
                !L(til(b), circ(a, c)))
              return fail(name, {a, b, c});
          }
      return pass(name);
    }
    case OptionalLaw::SelfAdjointness: {
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          for (int c = 0; c < n; ++c) {
            if (L(circ(a, b), c) != L(star(a, neg(c)), neg(b)) ||
                L(star(a, b), c) != L(circ(a, til(c)), til(b)))
              return fail(name, {a, b, c});
          }
      return pass(name);
    }
    case OptionalLaw::SelfAdjointnessPrinted: {
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          for (int c = 0; c < n; ++c) {
            if (L(circ(a, b), c) != L(circ(a, neg(c)), neg(b)) ||
                L(star(a, b), c) != L(circ(a, til(c)), til(b)))
              return fail(name, {a, b, c});
          }
      return pass(name);
    }
  }
  throw std::logic_error("unknown optional law");
}

std::optional<std::vector<int>> sup_inf_preservation_failure(const Dcip& d,
                                                            int max_family) {
  const int n = d.size();
  const Poset& p = d.poset();
  // All families of sizes 1..max_family, nondecreasing index tuples.
  std::vector<std::vector<int>> families;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int start) -> void {
    if (!cur.empty()) families.push_back(cur);
    if (static_cast<int>(cur.size()) == max_family) return;
    for (int i = start; i < n; ++i) {
      cur.push_back(i);
      self(self, i);
      cur.pop_back();
    }
  };
  rec(rec, 0);

  for (int a = 0; a < n; ++a)
    for (const auto& fam : families) {
      if (auto s = sup_of(p, fam)) {
        std::vector<int> imc, ims;
        for (int b : fam) {
          imc.push_back(d.circ(a, b));
          ims.push_back(d.star(a, b));
        }
        auto sc = sup_of(p, imc);
        auto ss = sup_of(p, ims);
        if (!sc || *sc != d.circ(a, *s) || !ss || *ss != d.star(a, *s)) {
          std::vector<int> w{a};
          w.insert(w.end(), fam.begin(), fam.end());
          return w;
        }
      }
      if (auto i = inf_of(p, fam)) {
        std::vector<int> ima, imq;
        for (int b : fam) {
          ima.push_back(d.arrow(a, b));
          imq.push_back(d.squiggle(a, b));
        }
        auto ia = inf_of(p, ima);
        auto iq = inf_of(p, imq);
        if (!ia || *ia != d.arrow(a, *i) || !iq || *iq != d.squiggle(a, *i)) {
          std::vector<int> w{a};
          w.insert(w.end(), fam.begin(), fam.end());
          return w;
        }
      }
    }
  return std::nullopt;
}

}  // namespace pealab
