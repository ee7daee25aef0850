#include "doctest.h"

#include "helpers.hpp"
#include "pealab/convert.hpp"
#include "pealab/enumerate.hpp"
#include "pealab/presets.hpp"
#include "pealab/psa.hpp"

using namespace pealab;

TEST_CASE("Sasaki products on the 4-chain are the Lukasiewicz t-norm") {
  Psa s = lpea_to_psa(make_mv4());
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      CHECK(s.circ(a, b) == std::max(0, a + b - 3));
      CHECK(s.star(a, b) == std::max(0, a + b - 3));
      CHECK(s.compl_left(a) == 3 - a);
      CHECK(s.compl_right(a) == 3 - a);
    }
}

TEST_CASE("derived implications on the 4-chain") {
  Psa s = lpea_to_psa(make_mv4());
  auto [arrow, squiggle] = derived_implications(s);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      CHECK(arrow[a * 4 + b] == std::min(3, 3 - a + b));
      CHECK(squiggle[a * 4 + b] == std::min(3, 3 - a + b));
    }
}

TEST_CASE("corrupting one product cell is rejected") {
  Psa s = lpea_to_psa(make_b4());
  auto circ = s.circ_table();
  circ[1 * 4 + 1] = 0;  // p.p was p
  auto r = Psa::check(s.poset(), circ, s.star_table(), s.neg_table(),
                      s.til_table());
  CHECK_FALSE(r.ok());
  CHECK(r.error->first_failure() != nullptr);
}

TEST_CASE("swapping the involution pair on a chain still validates") {
  // On a commutative chain ^- and ^~ coincide, so this is the same algebra.
  Psa s = lpea_to_psa(make_mv3());
  auto r = Psa::check(s.poset(), s.circ_table(), s.star_table(),
                      s.til_table(), s.neg_table());
  CHECK(r.ok());
}

TEST_CASE("double CI-lattice from a diamond satisfies the optional laws") {
  Dcip d = psa_to_dcilattice(lpea_to_psa(make_b4()));
  CHECK(d.optional_law(OptionalLaw::PseudoInvolution).pass);
  CHECK(d.optional_law(OptionalLaw::Divisibility).pass);
  CHECK(d.optional_law(OptionalLaw::OrthoExchange).pass);
  CHECK(d.optional_law(OptionalLaw::SelfAdjointness).pass);
  CHECK(d.compl_left(1) == 2);
  CHECK(d.compl_right(1) == 2);
}

TEST_CASE("residuation failure is caught by the checker") {
  // Meet-products on the 2-chain with the constant-1 implication: the
  // residuation direction 1.1 <= 0 iff 1 <= 1->0 fails.
  Poset two = *Poset::validate(2, {1, 1, 0, 1}, 0, 1);
  std::vector<int> meet = {0, 0, 0, 1};
  std::vector<int> one = {1, 1, 1, 1};
  auto r = Dcip::check(two, meet, meet, one, one);
  CHECK_FALSE(r.ok());
}

TEST_CASE("products distribute over joins and implications over meets") {
  for (int order = 2; order <= 5; ++order) {
    SearchOptions opts;
    opts.order = order;
    opts.require_lattice = true;
    for (const Pea& p : enumerate_peas(opts)) {
      Dcip d = psa_to_dcilattice(lpea_to_psa(p));
      CHECK_FALSE(sup_inf_preservation_failure(d, 3).has_value());
    }
  }
}
