#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "focal/scenarios.hpp"

namespace focal::report {

// Serializable views of scenario reports. Values are rendered strings, parameters "num/den".
struct RowDoc {
  std::string name;
  std::string paper_ref;
  std::string paper;
  std::string computed;
  std::string status;
  std::string expected;
  std::optional<std::string> corrected;
  std::optional<std::string> certificate;
  std::string note;
  bool operator==(const RowDoc&) const = default;
};

struct ReferenceDoc {
  std::string name;
  std::string paper_ref;
  std::string value;
  bool operator==(const ReferenceDoc&) const = default;
};

struct ScenarioDoc {
  std::string scenario;
  std::map<std::string, std::string> params;
  std::vector<RowDoc> results;
  std::vector<ReferenceDoc> references;
  bool operator==(const ScenarioDoc&) const = default;
};

struct LedgerDoc {
  std::string key;
  std::string paper_ref;
  std::string printed;
  std::string corrected;
  std::string certificate;
  std::string note;
  bool operator==(const LedgerDoc&) const = default;
};

struct VerifyDoc {
  std::string suite;
  std::vector<ScenarioDoc> reports;
  std::vector<LedgerDoc> ledger;
  std::string status;  // "ok" or "failed"
  bool operator==(const VerifyDoc&) const = default;
};

// One row per parameter point; columns are result names.
struct TableDoc {
  std::string scenario;
  std::vector<std::string> parameters;
  std::vector<std::string> columns;
  std::vector<std::map<std::string, std::string>> rows;  // parameter and column name -> cell
  bool operator==(const TableDoc&) const = default;
};

ScenarioDoc to_doc(const scenarios::ScenarioReport& r);
VerifyDoc make_verify_doc(const std::string& suite, const std::vector<scenarios::ScenarioReport>& reports);

// Exit status is derived from the row statuses only.
bool document_ok(const VerifyDoc& d);
int exit_code(const VerifyDoc& d);

std::string emit_json(const VerifyDoc& d);
VerifyDoc parse_verify_json(const std::string& text);
std::string emit_text(const VerifyDoc& d);
std::string emit_csv(const VerifyDoc& d);

// Rendered value as a table cell: integers without denominator, other rationals as "n/d".
std::string cell(const std::string& rendered);
TableDoc make_table(const std::string& scenario, const std::vector<scenarios::ScenarioReport>& reports);
std::string emit_json(const TableDoc& t);
TableDoc parse_table_json(const std::string& text);
std::string emit_csv(const TableDoc& t);
std::string emit_text(const TableDoc& t);

}  // namespace focal::report
