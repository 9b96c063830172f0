#include "doctest.h"
#include "focal/report.hpp"

using namespace focal;
using namespace focal::report;

namespace {

const VerifyDoc& all_doc() {
  static const VerifyDoc d = [] {
    std::vector<scenarios::ScenarioReport> reps;
    for (const auto& id : scenarios::scenario_ids()) reps.push_back(scenarios::run_scenario(id));
    return make_verify_doc("all", reps);
  }();
  return d;
}

}  // namespace

TEST_CASE("verify document round-trips through JSON") {
  const VerifyDoc& d = all_doc();
  CHECK(d.status == "ok");
  CHECK(d.ledger.size() == 5);
  VerifyDoc back = parse_verify_json(emit_json(d));
  CHECK(back == d);
  CHECK(emit_json(back) == emit_json(d));

  auto bound = make_verify_doc("focal", {scenarios::scenario_focal({{"a", 2}, {"b", Rational(1, 2)}})});
  CHECK(bound.reports[0].params.at("a") == "2/1");
  CHECK(bound.reports[0].params.at("b") == "1/2");
  CHECK(parse_verify_json(emit_json(bound)) == bound);
}

TEST_CASE("exit status depends on row statuses only") {
  VerifyDoc d = all_doc();
  CHECK(exit_code(d) == 0);
  d.ledger.clear();
  d.suite = "renamed";
  CHECK(exit_code(d) == 0);
  d.reports[0].results[0].status = "mismatch";
  CHECK(exit_code(d) == 1);
  VerifyDoc e = all_doc();
  for (auto& s : e.reports)
    for (auto& r : s.results)
      if (r.status == "paper_typo_suspected") r.status = "mismatch";
  CHECK(exit_code(e) == 1);
}

TEST_CASE("text, JSON and CSV carry the same values") {
  const VerifyDoc& d = all_doc();
  std::string text = emit_text(d), json = emit_json(d), csv = emit_csv(d);
  CHECK(csv.rfind("scenario,params,name,paper_ref,paper,computed,status\n", 0) == 0);
  for (const auto& s : d.reports)
    for (const auto& r : s.results) {
      CAPTURE(r.name);
      CHECK(text.find(r.computed) != std::string::npos);
      CHECK(json.find(r.computed) != std::string::npos);
      CHECK(csv.find(cell(r.computed)) != std::string::npos);
    }
}

TEST_CASE("tables") {
  std::vector<scenarios::ScenarioReport> reps;
  for (long d = 4; d <= 6; ++d) reps.push_back(scenarios::scenario_tangency({{"d", d}}));
  TableDoc t = make_table("tangency", reps);
  REQUIRE(t.rows.size() == 3);
  CHECK(t.rows[0].at("X1 order (via T)") == "12");
  CHECK(t.rows[1].at("X1 order (via T)") == "60");
  CHECK(t.rows[2].at("X1 order (via T)") == "180");
  CHECK(t.rows[0].at("d") == "4");
  std::string csv = emit_csv(t);
  CHECK(csv.rfind("d,", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 4);
  CHECK(parse_table_json(emit_json(t)) == t);

  CHECK(cell("12") == "12");
  CHECK(cell("24/2") == "12");
  CHECK(cell("-21/2") == "-21/2");
  CHECK(cell("2*d") == "2*d");
}
