#include "pealab/classify.hpp"

#include <sstream>
#include <stdexcept>

#include "pealab/convert.hpp"

namespace pealab {

bool compatible(const Pea& p, int a, int b) {
  const Poset& ord = p.order();
  auto mo = ord.meet(a, b);
  auto jo = ord.join(a, b);
  if (!mo || !jo)
    throw ConversionError("NotLattice",
                          "compatible: order is not a lattice", a, b);
  int m = *mo, j = *jo;
  bool back = p.left_diff(j, a) == p.left_diff(b, m) &&
              p.left_diff(j, b) == p.left_diff(a, m);
  // Stated equivalent form through the right subtraction.
  bool fwd = p.right_diff(m, a) == p.right_diff(b, j) &&
             p.right_diff(m, b) == p.right_diff(a, j);
  if (back != fwd)
    throw std::logic_error("compatible: the two defining forms disagree");
  return back;
}

bool pseudocommute(const Psa& s, int a, int b) {
  bool primary = s.star(b, s.compl_left(a)) == s.circ(s.compl_left(a), b) &&
                 s.star(a, s.compl_left(b)) == s.circ(s.compl_left(b), a);
  bool tilde = s.circ(a, s.compl_right(b)) == s.star(s.compl_right(b), a) &&
               s.circ(b, s.compl_right(a)) == s.star(s.compl_right(a), b);
  if (primary != tilde)
    throw std::logic_error("pseudocommute: the two defining forms disagree");
  return primary;
}

ClassifyFlags classify(const Pea& p) {
  const int n = p.size();
  ClassifyFlags f;
  f.is_lattice = p.is_lattice();

  f.is_effect_algebra = true;
  for (int a = 0; a < n && f.is_effect_algebra; ++a)
    for (int b = 0; b < n; ++b) {
      bool dl = p.defined(a, b), dr = p.defined(b, a);
      if (dl != dr || (dl && p.oplus(a, b) != p.oplus(b, a))) {
        f.is_effect_algebra = false;
        break;
      }
    }

  f.same_complements = true;
  for (int a = 0; a < n; ++a)
    if (p.compl_left(a) != p.compl_right(a)) f.same_complements = false;

  f.is_good = true;
  for (int a = 0; a < n && f.is_good; ++a)
    for (int b = 0; b < n; ++b) {
      int na = p.compl_left(a), nb = p.compl_left(b);
      int ta = p.compl_right(a), tb = p.compl_right(b);
      bool dl = p.defined(na, nb), dr = p.defined(ta, tb);
      if (dl != dr) {
        f.is_good = false;
        break;
      }
      if (dl && p.compl_right(p.oplus(na, nb)) !=
                    p.compl_left(p.oplus(ta, tb))) {
        f.is_good = false;
        break;
      }
    }

  if (f.is_lattice) {
    Psa s = lpea_to_psa(p);

    bool mv = true;
    for (int a = 0; a < n && mv; ++a)
      for (int b = 0; b < n; ++b)
        if (s.star(a, b) != s.circ(b, a)) {
          mv = false;
          break;
        }
    f.is_pseudo_mv = mv;

    bool all = true;
    int count = 0;
    for (int a = 0; a < n; ++a)
      for (int b = a; b < n; ++b) {
        if (compatible(p, a, b)) {
          if (a != b) ++count;
        } else {
          all = false;
        }
      }
    f.all_pairs_compatible = all;
    f.compatible_pair_count = count;

    auto [arrow, squiggle] = derived_implications(s);
    bool aeq = true;
    for (int x = 0; x < n && aeq; ++x)
      for (int y = 0; y < n; ++y)
        if (p.leq(y, x) && arrow[x * n + y] != squiggle[x * n + y]) {
          aeq = false;
          break;
        }
    f.arrow_eq_squiggle_on_leq = aeq;
  }
  return f;
}

std::string ClassifyFlags::to_string() const {
  std::ostringstream os;
  auto put = [&](const char* name, bool v) {
    os << name << ": " << (v ? "yes" : "no") << "\n";
  };
  put("lattice", is_lattice);
  put("effect_algebra", is_effect_algebra);
  put("same_complements", same_complements);
  put("good", is_good);
  auto put_opt = [&](const char* name, const std::optional<bool>& v) {
    os << name << ": " << (v ? (*v ? "yes" : "no") : "n/a (not a lattice)")
       << "\n";
  };
  put_opt("pseudo_mv", is_pseudo_mv);
  put_opt("all_pairs_compatible", all_pairs_compatible);
  put_opt("arrow_eq_squiggle_on_leq", arrow_eq_squiggle_on_leq);
  if (compatible_pair_count)
    os << "compatible_pairs: " << *compatible_pair_count << "\n";
  if (!pseudo_mv_vs_compatibility_agree())
    os << "note: pseudo-MV identity and all-pairs compatibility disagree on "
          "this model\n";
  return os.str();
}

}  // namespace pealab
