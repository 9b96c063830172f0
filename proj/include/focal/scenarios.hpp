#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "focal/chow.hpp"
#include "focal/oracle.hpp"
#include "focal/param_poly.hpp"

namespace focal::scenarios {

enum class Status { match, mismatch, paper_typo_suspected };
std::string to_string(Status s);
Status status_from_string(const std::string& s);

using Value = std::variant<ParamPoly, GradedClass>;
std::string render(const Value& v);

struct ResultRow {
  std::string name;
  std::string paper_ref;
  Value paper;
  Value computed;
  std::optional<Value> corrected;
  Status status = Status::match;
  Status expected = Status::match;
  std::string ledger_key;  // rows sharing a key form one ledger entry
  std::string note;
  bool example = false;  // fixed numeric instance, dropped when parameters are bound
  std::optional<oracle::IdentityCertificate> certificate;
};

struct ReferenceConstant {
  std::string name;
  std::string paper_ref;
  ParamPoly value;
};

struct ScenarioReport {
  std::string scenario;
  Assignment params;
  std::vector<ResultRow> results;
  std::vector<ReferenceConstant> references;

  // Every row either matches or shows the status it is expected to show.
  bool ok() const;
  std::size_t count(Status s) const;
};

struct LedgerEntry {
  std::string key;
  std::string paper_ref;
  std::string printed;
  std::string corrected;
  std::string certificate;
  std::string note;
};

std::vector<std::string> scenario_ids();

// Symbolic reports; bindings substitute parameters and re-certify every row.
ScenarioReport scenario_focal(const Assignment& bindings = {});
ScenarioReport scenario_jets(const Assignment& bindings = {});
ScenarioReport scenario_bisecants(const Assignment& bindings = {});
ScenarioReport scenario_tangency(const Assignment& bindings = {});
// Bindings among d, mu1, kappa, dstar, kappastar; with none the three worked examples are included.
ScenarioReport scenario_plucker(const Assignment& bindings = {});
ScenarioReport run_scenario(const std::string& id, const Assignment& bindings = {});

std::vector<LedgerEntry> reconciliation_ledger(const std::vector<ScenarioReport>& reports);

}  // namespace focal::scenarios
