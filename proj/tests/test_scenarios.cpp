#include <set>

#include "doctest.h"
#include "focal/manifest.hpp"
#include "focal/scenarios.hpp"

using namespace focal;
using namespace focal::scenarios;

namespace {

const ResultRow& find_row(const ScenarioReport& r, const std::string& name) {
  for (const auto& x : r.results)
    if (x.name == name) return x;
  FAIL("no row named " << name);
  throw std::logic_error("unreachable");
}

Rational number(const ResultRow& r) {
  auto v = std::get<ParamPoly>(r.computed).constant_value();
  REQUIRE(v.has_value());
  return *v;
}

std::vector<ScenarioReport> all_reports() {
  std::vector<ScenarioReport> out;
  for (const auto& id : scenario_ids()) out.push_back(run_scenario(id));
  return out;
}

}  // namespace

TEST_CASE("every scenario is ok symbolically") {
  std::size_t matches = 0;
  for (const auto& rep : all_reports()) {
    CAPTURE(rep.scenario);
    CHECK(rep.ok());
    matches += rep.count(Status::match);
    for (const auto& r : rep.results) {
      REQUIRE(r.certificate.has_value());
      CHECK((r.status == Status::match) == r.certificate->equal());
      if (r.status == Status::paper_typo_suspected) CHECK(r.corrected.has_value());
    }
  }
  CHECK(matches >= 30);
}

TEST_CASE("the ledger has the five known entries") {
  auto ledger = reconciliation_ledger(all_reports());
  std::set<std::string> keys;
  for (const auto& e : ledger) {
    keys.insert(e.key);
    CHECK_FALSE(e.printed.empty());
    CHECK_FALSE(e.corrected.empty());
    CHECK_FALSE(e.certificate.empty());
  }
  CHECK(keys == std::set<std::string>{"symmetric-square-table", "symmetric-power-c4", "parabolic-flex-proof",
                                      "singular-curve-accounting", "dual-quartic-focal-degree"});
  CHECK(reconciliation_ledger({}).empty());
}

TEST_CASE("symmetric power entry carries the corrected denominator") {
  auto ledger = reconciliation_ledger({scenario_tangency()});
  REQUIRE(ledger.size() == 3);
  const auto& e = ledger[0];
  CHECK(e.key == "symmetric-power-c4");
  CHECK(e.printed.find("13824/157") != std::string::npos);
  CHECK(e.corrected.find("24") != std::string::npos);
}

TEST_CASE("Kummer congruence") {
  Assignment k{{"a", 2}, {"b", 2}, {"g", 1}, {"k2", 4}, {"chi", 1}};
  auto f = scenario_focal(k);
  CHECK(f.ok());
  CHECK(number(find_row(f, "degree")) == Rational(4));
  CHECK(number(find_row(f, "class")) == Rational(4));
  CHECK(number(find_row(f, "mu1")) == Rational(12));
  CHECK(number(find_row(f, "deg C")) == Rational(0));
  auto j = scenario_jets(k);
  CHECK(number(find_row(j, "deg D")) == Rational(0));
  CHECK(number(find_row(j, "ruled degree")) == Rational(16));
  for (const auto& r : f.results) CHECK_FALSE(r.example);
}

TEST_CASE("numeric runs of the curve and surface scenarios") {
  auto b = scenario_bisecants({{"d", 4}, {"p", 1}});
  CHECK(number(find_row(b, "order")) == Rational(2));
  CHECK(number(find_row(b, "class")) == Rational(6));
  CHECK(number(find_row(b, "sectional genus")) == Rational(3));
  CHECK(number(find_row(b, "focal degree")) == Rational(8));
  CHECK(b.ok());

  auto t = scenario_tangency({{"d", 5}});
  CHECK(number(find_row(t, "X2 order")) == Rational(60));
  CHECK(number(find_row(t, "X2 class")) == Rational(45));
  CHECK(t.ok());
  CHECK(number(find_row(scenario_tangency({{"d", 6}}), "X1 order (via T)")) == Rational(180));
}

TEST_CASE("printed symmetric square table is demonstrated to fail") {
  auto b = scenario_bisecants();
  const auto& r = find_row(b, "order with the printed table");
  CHECK(r.status == Status::mismatch);
  REQUIRE(r.certificate->witness.has_value());
  CHECK(*r.certificate->lhs_at_witness != *r.certificate->rhs_at_witness);
  CHECK(find_row(b, "P.Delta").status == Status::paper_typo_suspected);
}

TEST_CASE("Plucker examples") {
  auto p = scenario_plucker();
  CHECK(number(find_row(p, "tangent developable: b")) == Rational(1));
  CHECK(number(find_row(p, "elliptic quartic dual: b")) == Rational(2));
  CHECK(number(find_row(p, "smooth quartic: b")) == Rational(28));
  CHECK(number(find_row(p, "quartic dual: cusp degree")) == Rational(96));
  CHECK(number(find_row(p, "quartic dual: focal degree")) == Rational(216));

  auto bound = scenario_plucker({{"d", 4}, {"mu1", 12}, {"kappa", 0}});
  CHECK(number(find_row(bound, "class b")) == Rational(28));
  CHECK(bound.ok());
  auto odd = scenario_plucker({{"d", 4}, {"mu1", 3}, {"kappa", Rational(1, 2)}});
  CHECK(find_row(odd, "class b").status == Status::mismatch);
  CHECK_FALSE(odd.ok());
}

TEST_CASE("bad input is rejected") {
  CHECK_THROWS_AS(run_scenario("bogus"), std::invalid_argument);
  CHECK_THROWS_AS(scenario_focal({{"zz", 1}}), std::invalid_argument);
  CHECK(status_from_string(to_string(Status::paper_typo_suspected)) == Status::paper_typo_suspected);
  CHECK_THROWS(status_from_string("maybe"));
}

TEST_CASE("every manifest key parses and is used") {
  std::set<std::string> used;
  for (const auto& rep : all_reports()) {
    for (const auto& r : rep.results) used.insert(r.paper_ref);
    for (const auto& c : rep.references) used.insert(c.paper_ref);
  }
  for (const auto& e : manifest::all()) {
    CAPTURE(e.key);
    bool indirect = e.key.rfind("plucker: ", 0) == 0 && e.key.find("relation") != std::string::npos;
    indirect = indirect || e.key == "bitangents: singular curve degree" || e.key == "flexes: singular curve degree" ||
               e.key == "quartic dual: focal multiplicity times degree";
    if (!indirect) CHECK(used.count(e.key) == 1);
  }
  CHECK_THROWS(manifest::find("no such key"));
}
