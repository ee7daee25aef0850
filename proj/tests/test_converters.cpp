#include "doctest.h"

#include "pealab/convert.hpp"
#include "pealab/enumerate.hpp"
#include "pealab/presets.hpp"

using namespace pealab;

namespace {

std::vector<Pea> models(int order, bool lattice_only) {
  SearchOptions opts;
  opts.order = order;
  opts.require_lattice = lattice_only;
  return enumerate_peas(opts);
}

}  // namespace

TEST_CASE("Sasaki round trip is the identity on lattice models up to order 5") {
  for (int order = 2; order <= 5; ++order)
    for (const Pea& p : models(order, true)) {
      Psa s = lpea_to_psa(p);
      CHECK(s.poset() == p.order());
      CHECK(psa_to_pea(s) == p);
    }
}

TEST_CASE("conditional round trip is the identity on all models up to order 5") {
  for (int order = 2; order <= 5; ++order)
    for (const Pea& p : models(order, false)) {
      Cdcip r = pea_to_cdcip(p);
      CHECK(r.poset() == p.order());
      CHECK(cdcip_to_pea(r) == p);
    }
}

TEST_CASE("algebra round trip: psa -> pea -> psa") {
  for (int order = 2; order <= 5; ++order)
    for (const Pea& p : models(order, true)) {
      Psa s = lpea_to_psa(p);
      Psa back = lpea_to_psa(psa_to_pea(s));
      CHECK(back == s);
    }
}

TEST_CASE("non-lattice input is refused by the Sasaki converter") {
  bool seen = false;
  for (const Pea& p : models(6, false)) {
    if (p.is_lattice()) continue;
    seen = true;
    CHECK_THROWS_WITH_AS(lpea_to_psa(p), doctest::Contains("lattice"),
                         ConversionError);
    break;
  }
  CHECK(seen);
}

TEST_CASE("implication lattice reproduces meet and join") {
  for (const Pea& p : models(4, true)) {
    Psa s = lpea_to_psa(p);
    Dcip d = psa_to_dcilattice(s);
    int n = d.size();
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        int m = *d.poset().meet(a, b);
        CHECK(d.circ(a, d.squiggle(a, b)) == m);
        CHECK(d.star(a, d.arrow(a, b)) == m);
      }
  }
}

TEST_CASE("conversions are monotone: leq is preserved and reflected") {
  for (const Pea& p : models(5, true)) {
    Psa s = lpea_to_psa(p);
    Dcip d = psa_to_dcilattice(s);
    Cdcip r = pea_to_cdcip(p);
    for (int a = 0; a < p.size(); ++a)
      for (int b = 0; b < p.size(); ++b) {
        CHECK(p.leq(a, b) == s.leq(a, b));
        CHECK(p.leq(a, b) == d.leq(a, b));
        CHECK(p.leq(a, b) == r.leq(a, b));
      }
  }
}

TEST_CASE("complements agree across the conversion chain") {
  for (const Pea& p : models(5, true)) {
    Psa s = lpea_to_psa(p);
    Cdcip r = pea_to_cdcip(p);
    for (int a = 0; a < p.size(); ++a) {
      CHECK(p.compl_left(a) == s.compl_left(a));
      CHECK(p.compl_right(a) == s.compl_right(a));
      CHECK(p.compl_left(a) == r.compl_left(a));
      CHECK(p.compl_right(a) == r.compl_right(a));
    }
  }
}
