#include "doctest.h"

#include <set>

#include "helpers.hpp"
#include "pealab/enumerate.hpp"
#include "pealab/term.hpp"

using namespace pealab;

namespace {

std::vector<std::vector<int>> tables(const SearchOptions& opts) {
  std::vector<std::vector<int>> out;
  enumerate_peas(opts, [&](const Pea& p) { out.push_back(p.table()); });
  return out;
}

}  // namespace

TEST_CASE("full-table oracle at orders 2 and 3") {
  for (int n : {2, 3}) {
    std::set<std::vector<int>> naive_all;
    std::set<std::vector<int>> naive_reps;
    testutil::all_tables(n, [&](const std::vector<int>& t) {
      if (!testutil::naive_is_pea(n, t)) return;
      naive_all.insert(t);
      naive_reps.insert(testutil::naive_min_form(n, t));
    });

    SearchOptions opts;
    opts.order = n;
    opts.up_to_iso = false;
    auto lib_all = tables(opts);
    CHECK(std::set<std::vector<int>>(lib_all.begin(), lib_all.end()) ==
          naive_all);

    opts.up_to_iso = true;
    auto lib_reps = tables(opts);
    CHECK(lib_reps.size() == naive_reps.size());
    for (const auto& t : lib_reps)
      CHECK(naive_reps.count(testutil::naive_min_form(n, t)) == 1);
  }
  // The expected class counts at these orders.
  SearchOptions o2, o3;
  o2.order = 2;
  o3.order = 3;
  CHECK(enumerate_peas(o2).size() == 1);
  CHECK(enumerate_peas(o3).size() == 1);
}

TEST_CASE("bordered-table oracle at order 4") {
  std::set<std::vector<int>> naive_all;
  std::set<std::vector<int>> naive_reps;
  testutil::bordered_tables(4, [&](const std::vector<int>& t) {
    if (!testutil::naive_is_pea(4, t)) return;
    naive_all.insert(t);
    naive_reps.insert(testutil::naive_min_form(4, t));
  });

  SearchOptions opts;
  opts.order = 4;
  opts.up_to_iso = false;
  auto lib_all = tables(opts);
  CHECK(std::set<std::vector<int>>(lib_all.begin(), lib_all.end()) ==
        naive_all);

  opts.up_to_iso = true;
  CHECK(tables(opts).size() == naive_reps.size());
  CHECK(naive_reps.size() == 3);
}

TEST_CASE("canonical form is an isomorphism invariant") {
  SearchOptions opts;
  opts.order = 5;
  opts.up_to_iso = false;
  auto all = tables(opts);
  for (const auto& t : all) {
    auto c = canonical_table(5, t);
    CHECK(c == testutil::naive_min_form(5, t));
    // The canonical image is itself a model of the same class.
    CHECK(Pea::from_table(5, c, 0, 4).ok());
  }
}

TEST_CASE("one canonical representative per isomorphism class") {
  SearchOptions no_iso, iso;
  no_iso.order = 5;
  no_iso.up_to_iso = false;
  iso.order = 5;
  auto all = tables(no_iso);
  auto reps = tables(iso);
  std::set<std::vector<int>> orbit_mins;
  for (const auto& t : all) orbit_mins.insert(canonical_table(5, t));
  CHECK(std::set<std::vector<int>>(reps.begin(), reps.end()) == orbit_mins);
  for (const auto& t : reps) CHECK(canonical_table(5, t) == t);
}

TEST_CASE("output is sorted and worker-count independent") {
  for (int order : {5, 6}) {
    SearchOptions base;
    base.order = order;
    auto one = tables(base);
    CHECK(std::is_sorted(one.begin(), one.end()));
    for (int w : {2, 4, 7}) {
      SearchOptions opts = base;
      opts.worker_count = w;
      CHECK(tables(opts) == one);
    }
  }
}

TEST_CASE("lattice restriction and law filter") {
  SearchOptions all, lat, comm;
  all.order = 6;
  lat.order = 6;
  lat.require_lattice = true;
  comm.order = 6;
  comm.filter.push_back(parse_law("x (+) y = y (+) x"));
  auto va = enumerate_peas(all);
  auto vl = enumerate_peas(lat);
  auto vc = enumerate_peas(comm);
  CHECK(va.size() == 12);
  CHECK(vl.size() < va.size());
  CHECK(vc.size() == 10);  // two non-commutative classes at order 6
  for (const Pea& p : vl) CHECK(p.is_lattice());
}

TEST_CASE("order guard") {
  SearchOptions opts;
  opts.order = 8;
  CHECK_THROWS_AS(enumerate_peas(opts), OrderTooLarge);
  opts.order = 1;
  CHECK_THROWS_AS(enumerate_peas(opts), OrderTooLarge);
}

TEST_CASE("countermodel search returns the smallest order, first assignment") {
  auto found = search_counterexample(parse_law("x (+) y = y (+) x"), 7, false);
  REQUIRE(found.has_value());
  CHECK(found->model.size() == 5);
  CHECK(found->assignment == Assignment{{'x', 1}, {'y', 2}});

  CHECK_FALSE(
      search_counterexample(parse_law("x (+) 0 = x"), 5, false).has_value());
  // The product is not commutative even on commutative models: the
  // horizontal sum of two 2-chains separates x . y from y . x.
  auto prod = search_counterexample(parse_law("x . y = y . x"), 5, true);
  REQUIRE(prod.has_value());
  CHECK(prod->model.size() == 4);
}
