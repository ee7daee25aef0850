#include "doctest.h"

#include <nlohmann/json.hpp>

#include "helpers.hpp"
#include "pealab/convert.hpp"
#include "pealab/model_io.hpp"
#include "pealab/presets.hpp"

using namespace pealab;
using testutil::data_path;
using testutil::slurp;

TEST_CASE("golden files validate and survive a byte-exact round trip") {
  for (const char* name : {"e2.json", "mv3.json", "b4.json", "mv4.json"}) {
    std::string text = slurp(data_path(name));
    REQUIRE_FALSE(text.empty());
    ModelFile m = parse_model(text);
    CHECK(m.kind == "pea");
    CHECK(to_json(m) == text);
  }
  CHECK(*parse_model(slurp(data_path("mv3.json"))).pea() == make_mv3());
  CHECK(*parse_model(slurp(data_path("b4.json"))).pea() == make_b4());
}

TEST_CASE("nonstandard labelling is normalized on read") {
  // The 3-chain written with zero at index 2, unit at index 0.
  std::string text = R"({
    "kind": "pea",
    "order": 3,
    "names": ["1", "a", "0"],
    "oplus": [[null, null, 0],
              [null, 0, 1],
              [0, 1, 2]]
  })";
  ModelFile m = parse_model(text);
  CHECK(*m.pea() == make_mv3());
  CHECK(m.names == std::vector<std::string>{"0", "a", "1"});
}

TEST_CASE("negative corpus fails with the documented witness") {
  nlohmann::json expected =
      nlohmann::json::parse(slurp(data_path("negative/expected.json")));
  CHECK(expected.size() >= 4);
  for (auto& [name, want] : expected.items()) {
    bool threw = false;
    try {
      read_model(data_path("negative/" + name));
    } catch (const IoError& e) {
      threw = true;
      REQUIRE(e.report.has_value());
      const AxiomVerdict* f = e.report->first_failure();
      REQUIRE(f != nullptr);
      CHECK(f->axiom == want["axiom"].get<std::string>());
      CHECK(f->witness == want["witness"].get<std::vector<int>>());
    }
    CHECK(threw);
  }
}

TEST_CASE("malformed input reports a parse error without a report") {
  for (const char* bad :
       {"{not json", R"({"kind": "pea"})",
        R"({"kind": "what", "order": 2, "oplus": [[0,1],[1,null]]})",
        R"({"kind": "pea", "order": 2, "oplus": [[0,7],[1,null]]})",
        R"({"kind": "pea", "order": 2, "oplus": [[0,1]]})"}) {
    bool threw = false;
    try {
      parse_model(bad);
    } catch (const IoError& e) {
      threw = true;
      CHECK_FALSE(e.report.has_value());
    }
    CHECK(threw);
  }
}

TEST_CASE("derived structures serialize and parse back to themselves") {
  Pea p = make_b4();
  Psa s = lpea_to_psa(p);
  Dcip d = psa_to_dcilattice(s);
  Cdcip r = pea_to_cdcip(p);

  ModelFile mf;
  mf.kind = "psa";
  mf.model = s;
  ModelFile back = parse_model(to_json(mf));
  CHECK(*back.psa() == s);

  mf.kind = "dcip";
  mf.model = d;
  back = parse_model(to_json(mf));
  CHECK(back.dcip()->circ_table() == d.circ_table());
  CHECK(back.dcip()->arrow_table() == d.arrow_table());

  mf.kind = "cdcip";
  mf.model = r;
  back = parse_model(to_json(mf));
  CHECK(back.cdcip()->circ_table() == r.circ_table());
  CHECK(back.cdcip()->squiggle_table() == r.squiggle_table());
}

TEST_CASE("table hash is stable and label-sensitive") {
  Pea p = make_mv4();
  std::string h = table_hash(p.size(), p.table());
  CHECK(h.size() == 16);
  CHECK(h == table_hash(p.size(), p.table()));
  CHECK(h != table_hash(4, make_b4().table()));
}
