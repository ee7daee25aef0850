#include "pealab/pea.hpp"

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

Result<Pea, CheckReport> Pea::from_table(int n, std::vector<int> oplus,
                                         int zero, int unit) {
  using R = Result<Pea, CheckReport>;
  if (n < 1 || static_cast<int>(oplus.size()) != n * n || zero < 0 ||
      zero >= n || unit < 0 || unit >= n)
    throw std::invalid_argument("Pea::from_table: bad dimensions");
  for (int v : oplus)
    if (v != kUndef && (v < 0 || v >= n))
      throw std::invalid_argument("Pea::from_table: entry out of range");

  CheckReport report{"pea", {}};
  auto at = [&](int a, int b) { return oplus[a * n + b]; };
  auto def = [&](int a, int b) { return at(a, b) != kUndef; };

  // PE1: (a+b)+c exists iff a+(b+c) exists, and then they are equal.
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        bool lhs = def(a, b) && def(at(a, b), c);
        bool rhs = def(b, c) && def(a, at(b, c));
        if (lhs != rhs) {
          report.verdicts.push_back(
              fail("PE1", {a, b, c}, "existence of the two bracketings differs"));
          return R::failure(report);
        }
        if (lhs && at(at(a, b), c) != at(a, at(b, c))) {
          report.verdicts.push_back(fail("PE1", {a, b, c},
                                         "bracketings differ: " +
                                             std::to_string(at(at(a, b), c)) +
                                             " vs " +
                                             std::to_string(at(a, at(b, c)))));
          return R::failure(report);
        }
      }
  report.verdicts.push_back(pass("PE1"));

  // PE2: exactly one d with a+d=1 and exactly one e with e+a=1.
  std::vector<int> cl(n, kUndef), cr(n, kUndef);
  for (int a = 0; a < n; ++a) {
    int d = kUndef, e = kUndef;
    bool bad = false;
    for (int x = 0; x < n; ++x) {
      if (at(a, x) == unit) {
        if (d != kUndef) bad = true;
        d = x;
      }
      if (at(x, a) == unit) {
        if (e != kUndef) bad = true;
        e = x;
      }
    }
    if (bad || d == kUndef || e == kUndef) {
      report.verdicts.push_back(fail("PE2", {a}));
      return R::failure(report);
    }
    cr[a] = d;
    cl[a] = e;
  }
  report.verdicts.push_back(pass("PE2"));

  // PE3 with the uniqueness the paper derives from PE1+PE2.
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (!def(a, b)) continue;
      int s = at(a, b);
      int d = kUndef, e = kUndef;
      bool bad = false;
      for (int x = 0; x < n; ++x) {
        if (at(x, a) == s) {
          if (d != kUndef) bad = true;
          d = x;
        }
        if (at(b, x) == s) {
          if (e != kUndef) bad = true;
          e = x;
        }
      }
      if (bad || d == kUndef || e == kUndef) {
        report.verdicts.push_back(fail("PE3", {a, b}));
        return R::failure(report);
      }
    }
  report.verdicts.push_back(pass("PE3"));

  // PE4
  for (int a = 0; a < n; ++a)
    if (a != zero && (def(a, unit) || def(unit, a))) {
      report.verdicts.push_back(fail("PE4", {a}));
      return R::failure(report);
    }
  report.verdicts.push_back(pass("PE4"));

  // Consequence: zero neutral.
  for (int a = 0; a < n; ++a)
    if (at(zero, a) != a || at(a, zero) != a) {
      report.verdicts.push_back(fail("zero-neutral", {a}));
      return R::failure(report);
    }
  report.verdicts.push_back(pass("zero-neutral"));

  // Induced order: the left and right existential forms must agree.
  std::vector<uint8_t> leq(n * n, 0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      bool left = false, right = false;
      for (int c = 0; c < n; ++c) {
        if (at(c, a) == b) left = true;
        if (at(a, c) == b) right = true;
      }
      if (left != right) {
        report.verdicts.push_back(fail("OrderMismatch", {a, b}));
        return R::failure(report);
      }
      leq[a * n + b] = left ? 1 : 0;
    }
  report.verdicts.push_back(pass("order-agreement"));

  auto poset = Poset::validate(n, std::move(leq), zero, unit);
  if (!poset.ok()) {
    report.verdicts.push_back(
        fail("induced-order", {poset.error->x, poset.error->y},
             poset.error->message()));
    return R::failure(report);
  }
  report.verdicts.push_back(pass("induced-order"));

  // Definedness matches the complement criterion a+b exists iff a <= b^-.
  const Poset& ord = *poset.value;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      bool d = def(a, b);
      if (d != ord.leq(a, cl[b]) || d != ord.leq(b, cr[a])) {
        report.verdicts.push_back(fail("domain-criterion", {a, b}));
        return R::failure(report);
      }
    }
  report.verdicts.push_back(pass("domain-criterion"));

  return R::success(Pea(n, std::move(oplus), zero, unit,
                        std::move(*poset.value), std::move(cl),
                        std::move(cr)));
}

int Pea::left_diff(int b, int a) const {
  if (!leq(a, b))
    throw std::domain_error("left_diff: NotComparable(" + std::to_string(a) +
                            "," + std::to_string(b) + ")");
  int r = kUndef;
  for (int x = 0; x < n_; ++x)
    if (oplus(x, a) == b) {
      if (r != kUndef) throw std::logic_error("left_diff: not unique");
      r = x;
    }
  if (r == kUndef) throw std::logic_error("left_diff: no witness");
  return r;
}

int Pea::right_diff(int a, int b) const {
  if (!leq(a, b))
    throw std::domain_error("right_diff: NotComparable(" + std::to_string(a) +
                            "," + std::to_string(b) + ")");
  int r = kUndef;
  for (int y = 0; y < n_; ++y)
    if (oplus(a, y) == b) {
      if (r != kUndef) throw std::logic_error("right_diff: not unique");
      r = y;
    }
  if (r == kUndef) throw std::logic_error("right_diff: no witness");
  return r;
}

}  // namespace pealab
