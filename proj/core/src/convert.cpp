#include "pealab/convert.hpp"

#include <stdexcept>
#include <string>

namespace pealab {

namespace {

[[noreturn]] void internal_failure(const std::string& where,
                                   const CheckReport& report) {
  throw std::logic_error(where + ": output failed validation: " +
                         report.summary());
}

}  // namespace

Psa lpea_to_psa(const Pea& p) {
  const int n = p.size();
  const Poset& ord = p.order();
  if (auto bad = ord.lattice_failure())
    throw ConversionError("NotLattice",
                          "lpea_to_psa: order is not a lattice at (" +
                              std::to_string(bad->first) + "," +
                              std::to_string(bad->second) + ")",
                          bad->first, bad->second);

  std::vector<int> circ(n * n), star(n * n), neg(n), til(n);
  for (int a = 0; a < n; ++a) {
    neg[a] = p.compl_left(a);
    til[a] = p.compl_right(a);
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int mc = *ord.meet(a, neg[b]);
      circ[a * n + b] = p.right_diff(mc, a);  // (a /\ b^-) / a
      int ms = *ord.meet(a, til[b]);
      star[a * n + b] = p.left_diff(a, ms);   // a \ (a /\ b^~)
    }

  auto res = Psa::check(ord, std::move(circ), std::move(star), std::move(neg),
                        std::move(til));
  if (!res.ok()) internal_failure("lpea_to_psa", *res.error);
  return std::move(*res.value);
}

Pea psa_to_pea(const Psa& s) {
  const int n = s.size();
  std::vector<int> oplus(n * n, kUndef);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (!s.leq(a, s.compl_left(b))) continue;
      int v1 = s.compl_left(s.circ(s.compl_right(a), s.compl_right(b)));
      int v2 = s.compl_right(s.star(s.compl_left(b), s.compl_left(a)));
      if (v1 != v2)
        throw ConversionError("ExpressionMismatch",
                              "psa_to_pea: defining expressions disagree at (" +
                                  std::to_string(a) + "," + std::to_string(b) +
                                  ")",
                              a, b);
      oplus[a * n + b] = v1;
    }

  auto res = Pea::from_table(n, std::move(oplus), s.poset().bottom(),
                             s.poset().top());
  if (!res.ok()) internal_failure("psa_to_pea", *res.error);
  if (!(res.value->order() == s.poset()))
    throw std::logic_error("psa_to_pea: induced order differs from input order");
  if (!res.value->is_lattice())
    throw std::logic_error("psa_to_pea: induced order is not a lattice");
  return std::move(*res.value);
}

Dcip psa_to_dcilattice(const Psa& s) {
  const int n = s.size();
  auto [arrow, squiggle] = derived_implications(s);
  auto res = Dcip::check(s.poset(), s.circ_table(), s.star_table(),
                         std::move(arrow), std::move(squiggle));
  if (!res.ok()) internal_failure("psa_to_dcilattice", *res.error);
  const Dcip& d = *res.value;

  const Poset& ord = s.poset();
  if (!ord.is_lattice())
    throw std::logic_error("psa_to_dcilattice: order is not a lattice");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int m = *ord.meet(a, b);
      if (d.circ(a, d.squiggle(a, b)) != m || d.star(a, d.arrow(a, b)) != m)
        throw std::logic_error("psa_to_dcilattice: meet formula broken");
      int j = *ord.join(a, b);
      int mneg = *ord.meet(s.compl_left(a), s.compl_left(b));
      int mtil = *ord.meet(s.compl_right(a), s.compl_right(b));
      if (s.compl_right(mneg) != j || s.compl_left(mtil) != j)
        throw std::logic_error("psa_to_dcilattice: join formula broken");
    }
  return std::move(*res.value);
}

Cdcip pea_to_cdcip(const Pea& p) {
  const int n = p.size();
  std::vector<int> circ(n * n, kUndef), star(n * n, kUndef),
      arrow(n * n, kUndef), squiggle(n * n, kUndef);
  auto neg = [&](int a) { return p.compl_left(a); };
  auto til = [&](int a) { return p.compl_right(a); };

  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (p.leq(neg(y), x)) {
        int v = p.right_diff(neg(y), x);  // y^- / x
        if (v != til(p.oplus(neg(x), neg(y))))
          throw std::logic_error("pea_to_cdcip: circ forms disagree");
        circ[x * n + y] = v;
      }
      if (p.leq(til(y), x)) {
        int v = p.left_diff(x, til(y));  // x \ y^~
        if (v != neg(p.oplus(til(y), til(x))))
          throw std::logic_error("pea_to_cdcip: star forms disagree");
        star[x * n + y] = v;
      }
      if (p.leq(y, x)) {
        // x -> y = (x . y^~)^- = x^- (+) y, both computed and compared.
        int a1 = neg(p.right_diff(y, x));
        int a2 = p.oplus(neg(x), y);
        if (a1 != a2)
          throw std::logic_error("pea_to_cdcip: arrow forms disagree");
        arrow[x * n + y] = a1;
        int q1 = til(p.left_diff(x, y));
        int q2 = p.oplus(y, til(x));
        if (q1 != q2)
          throw std::logic_error("pea_to_cdcip: squiggle forms disagree");
        squiggle[x * n + y] = q1;
      }
    }

  auto res = Cdcip::check(p.order(), std::move(circ), std::move(star),
                          std::move(arrow), std::move(squiggle),
                          {CdciLaw::PseudoInvolution, CdciLaw::Divisibility,
                           CdciLaw::Associativity, CdciLaw::PeaCondition});
  if (!res.ok()) internal_failure("pea_to_cdcip", *res.error);
  if (!res.value->report().ok())
    internal_failure("pea_to_cdcip", res.value->report());
  return std::move(*res.value);
}

Pea cdcip_to_pea(const Cdcip& r) {
  for (CdciLaw law : {CdciLaw::PseudoInvolution, CdciLaw::Divisibility,
                      CdciLaw::Associativity, CdciLaw::PeaCondition}) {
    AxiomVerdict v = r.optional_law(law);
    if (!v.pass)
      throw ConversionError("PreconditionFailed",
                            "cdcip_to_pea: input does not satisfy " + v.axiom);
  }

  const int n = r.size();
  std::vector<int> oplus(n * n, kUndef);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (!r.leq(x, r.compl_left(y))) continue;
      int s = r.star(r.compl_left(y), r.compl_left(x));
      int c = r.circ(r.compl_right(x), r.compl_right(y));
      if (s == kUndef || c == kUndef ||
          r.squiggle(s, r.poset().bottom()) != r.arrow(c, r.poset().bottom()))
        throw ConversionError("ExpressionMismatch",
                              "cdcip_to_pea: defining forms disagree at (" +
                                  std::to_string(x) + "," + std::to_string(y) +
                                  ")",
                              x, y);
      oplus[x * n + y] = r.squiggle(s, r.poset().bottom());
    }

  auto res = Pea::from_table(n, std::move(oplus), r.poset().bottom(),
                             r.poset().top());
  if (!res.ok()) internal_failure("cdcip_to_pea", *res.error);
  if (!(res.value->order() == r.poset())) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (res.value->leq(a, b) != r.leq(a, b))
          throw ConversionError("OrderMismatch",
                                "cdcip_to_pea: induced order differs at (" +
                                    std::to_string(a) + "," +
                                    std::to_string(b) + ")",
                                a, b);
  }
  return std::move(*res.value);
}

}  // namespace pealab
