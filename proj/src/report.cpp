#include "focal/report.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace focal::report {

using nlohmann::json;
using scenarios::Status;

namespace {

json row_json(const RowDoc& r) {
  json j = {{"name", r.name},         {"paper_ref", r.paper_ref}, {"paper", r.paper},
            {"computed", r.computed}, {"status", r.status},       {"expected", r.expected}};
  if (r.corrected) j["corrected"] = *r.corrected;
  if (r.certificate) j["certificate"] = *r.certificate;
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

RowDoc row_from(const json& j) {
  RowDoc r;
  r.name = j.at("name").get<std::string>();
  r.paper_ref = j.at("paper_ref").get<std::string>();
  r.paper = j.at("paper").get<std::string>();
  r.computed = j.at("computed").get<std::string>();
  r.status = j.at("status").get<std::string>();
  r.expected = j.value("expected", r.status == "mismatch" ? std::string("mismatch") : std::string("match"));
  if (j.contains("corrected")) r.corrected = j.at("corrected").get<std::string>();
  if (j.contains("certificate")) r.certificate = j.at("certificate").get<std::string>();
  r.note = j.value("note", std::string());
  return r;
}

json scenario_json(const ScenarioDoc& s) {
  json rows = json::array(), refs = json::array();
  for (const auto& r : s.results) rows.push_back(row_json(r));
  for (const auto& c : s.references) refs.push_back({{"name", c.name}, {"paper_ref", c.paper_ref}, {"value", c.value}});
  return {{"scenario", s.scenario}, {"params", s.params}, {"results", rows}, {"references", refs}};
}

ScenarioDoc scenario_from(const json& j) {
  ScenarioDoc s;
  s.scenario = j.at("scenario").get<std::string>();
  s.params = j.at("params").get<std::map<std::string, std::string>>();
  for (const auto& r : j.at("results")) s.results.push_back(row_from(r));
  if (j.contains("references"))
    for (const auto& c : j.at("references"))
      s.references.push_back(
          {c.at("name").get<std::string>(), c.at("paper_ref").get<std::string>(), c.at("value").get<std::string>()});
  return s;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string csv_line(const std::vector<std::string>& fields) {
  std::string out;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out += ',';
    out += csv_field(fields[i]);
  }
  return out + "\n";
}

std::string param_string(const std::map<std::string, std::string>& params) {
  std::string out;
  for (const auto& [k, v] : params) {
    if (!out.empty()) out += ", ";
    out += k + "=" + cell(v);
  }
  return out.empty() ? "symbolic" : out;
}

}  // namespace

ScenarioDoc to_doc(const scenarios::ScenarioReport& r) {
  ScenarioDoc d;
  d.scenario = r.scenario;
  for (const auto& [k, v] : r.params) d.params[k] = v.to_fraction_string();
  for (const auto& x : r.results) {
    RowDoc row;
    row.name = x.name;
    row.paper_ref = x.paper_ref;
    row.paper = scenarios::render(x.paper);
    row.computed = scenarios::render(x.computed);
    row.status = scenarios::to_string(x.status);
    row.expected = scenarios::to_string(x.expected);
    if (x.corrected) row.corrected = scenarios::render(*x.corrected);
    if (x.certificate) row.certificate = x.certificate->summary();
    row.note = x.note;
    d.results.push_back(std::move(row));
  }
  for (const auto& c : r.references) d.references.push_back({c.name, c.paper_ref, c.value.to_string()});
  return d;
}

VerifyDoc make_verify_doc(const std::string& suite, const std::vector<scenarios::ScenarioReport>& reports) {
  VerifyDoc d;
  d.suite = suite;
  for (const auto& r : reports) d.reports.push_back(to_doc(r));
  for (const auto& e : scenarios::reconciliation_ledger(reports))
    d.ledger.push_back({e.key, e.paper_ref, e.printed, e.corrected, e.certificate, e.note});
  d.status = document_ok(d) ? "ok" : "failed";
  return d;
}

bool document_ok(const VerifyDoc& d) {
  for (const auto& s : d.reports)
    for (const auto& r : s.results)
      if (r.status != "match" && r.status != r.expected) return false;
  return true;
}

int exit_code(const VerifyDoc& d) { return document_ok(d) ? 0 : 1; }

std::string emit_json(const VerifyDoc& d) {
  json reports = json::array(), ledger = json::array();
  for (const auto& s : d.reports) reports.push_back(scenario_json(s));
  for (const auto& e : d.ledger)
    ledger.push_back({{"key", e.key},
                      {"paper_ref", e.paper_ref},
                      {"printed", e.printed},
                      {"corrected", e.corrected},
                      {"certificate", e.certificate},
                      {"note", e.note}});
  json j = {{"suite", d.suite}, {"reports", reports}, {"ledger", ledger}, {"status", d.status}};
  return j.dump(2) + "\n";
}

VerifyDoc parse_verify_json(const std::string& text) {
  json j = json::parse(text);
  VerifyDoc d;
  d.suite = j.at("suite").get<std::string>();
  for (const auto& s : j.at("reports")) d.reports.push_back(scenario_from(s));
  for (const auto& e : j.at("ledger"))
    d.ledger.push_back({e.at("key").get<std::string>(), e.at("paper_ref").get<std::string>(),
                        e.at("printed").get<std::string>(), e.at("corrected").get<std::string>(),
                        e.at("certificate").get<std::string>(), e.value("note", std::string())});
  d.status = j.at("status").get<std::string>();
  return d;
}

std::string emit_text(const VerifyDoc& d) {
  std::ostringstream os;
  std::size_t counts[3] = {0, 0, 0};
  for (const auto& s : d.reports) {
    os << "== " << s.scenario << " (" << param_string(s.params) << ")\n";
    for (const auto& r : s.results) {
      Status st = scenarios::status_from_string(r.status);
      ++counts[static_cast<int>(st)];
      const char* tag = st == Status::match ? "ok  " : (r.status == r.expected ? "note" : "FAIL");
      os << "  [" << tag << "] " << r.name << " (" << r.paper_ref << ")\n"
         << "         printed:  " << r.paper << "\n"
         << "         computed: " << r.computed << "\n";
      if (st != Status::match) {
        os << "         status:   " << r.status << "\n";
        if (r.corrected) os << "         corrected: " << *r.corrected << "\n";
      }
      if (!r.note.empty()) os << "         note:     " << r.note << "\n";
    }
    for (const auto& c : s.references) os << "  [ref ] " << c.name << " = " << c.value << "\n";
  }
  if (!d.ledger.empty()) {
    os << "== reconciliation ledger (" << d.ledger.size() << " entries)\n";
    for (const auto& e : d.ledger) {
      os << "  " << e.key << " (" << e.paper_ref << ")\n"
         << "    printed:   " << e.printed << "\n"
         << "    corrected: " << e.corrected << "\n"
         << "    evidence:  " << e.certificate << "\n";
      if (!e.note.empty()) os << "    note:      " << e.note << "\n";
    }
  }
  os << "matched " << counts[0] << ", suspected typos " << counts[2] << ", mismatches " << counts[1]
     << "; ledger entries " << d.ledger.size() << "; status " << d.status << "\n";
  return os.str();
}

std::string emit_csv(const VerifyDoc& d) {
  std::string out = csv_line({"scenario", "params", "name", "paper_ref", "paper", "computed", "status"});
  for (const auto& s : d.reports)
    for (const auto& r : s.results)
      out += csv_line({s.scenario, param_string(s.params), r.name, r.paper_ref, cell(r.paper), cell(r.computed),
                       r.status});
  return out;
}

std::string cell(const std::string& rendered) {
  try {
    return Rational::parse(rendered).to_string();
  } catch (const std::exception&) {
    return rendered;
  }
}

TableDoc make_table(const std::string& scenario, const std::vector<scenarios::ScenarioReport>& reports) {
  TableDoc t;
  t.scenario = scenario;
  for (const auto& r : reports) {
    std::map<std::string, std::string> row;
    for (const auto& [k, v] : r.params) {
      if (std::find(t.parameters.begin(), t.parameters.end(), k) == t.parameters.end()) t.parameters.push_back(k);
      row[k] = v.to_string();
    }
    for (const auto& x : r.results) {
      if (std::find(t.columns.begin(), t.columns.end(), x.name) == t.columns.end()) t.columns.push_back(x.name);
      row[x.name] = cell(scenarios::render(x.computed));
    }
    t.rows.push_back(std::move(row));
  }
  return t;
}

std::string emit_json(const TableDoc& t) {
  json rows = json::array();
  for (const auto& r : t.rows) rows.push_back(r);
  json j = {{"scenario", t.scenario}, {"parameters", t.parameters}, {"columns", t.columns}, {"rows", rows}};
  return j.dump(2) + "\n";
}

TableDoc parse_table_json(const std::string& text) {
  json j = json::parse(text);
  TableDoc t;
  t.scenario = j.at("scenario").get<std::string>();
  t.parameters = j.at("parameters").get<std::vector<std::string>>();
  t.columns = j.at("columns").get<std::vector<std::string>>();
  for (const auto& r : j.at("rows")) t.rows.push_back(r.get<std::map<std::string, std::string>>());
  return t;
}

std::string emit_csv(const TableDoc& t) {
  std::vector<std::string> header = t.parameters;
  header.insert(header.end(), t.columns.begin(), t.columns.end());
  std::string out = csv_line(header);
  for (const auto& r : t.rows) {
    std::vector<std::string> fields;
    for (const auto& h : header) {
      auto it = r.find(h);
      fields.push_back(it == r.end() ? "" : it->second);
    }
    out += csv_line(fields);
  }
  return out;
}

std::string emit_text(const TableDoc& t) {
  std::ostringstream os;
  os << "== " << t.scenario << "\n";
  for (const auto& r : t.rows) {
    std::string params;
    for (const auto& p : t.parameters) params += (params.empty() ? "" : ", ") + p + "=" + r.at(p);
    os << "-- " << params << "\n";
    for (const auto& c : t.columns)
      if (auto it = r.find(c); it != r.end()) os << "  " << c << " = " << it->second << "\n";
  }
  return os.str();
}

}  // namespace focal::report
