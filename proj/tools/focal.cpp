#include <fstream>
#include <iostream>
#include <regex>
#include <stdexcept>

#include "CLI11.hpp"
#include "focal/report.hpp"
#include "focal/scenarios.hpp"

using namespace focal;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Sweep {
  std::string name;
  long lo = 0, hi = 0;
};

bool known_scenario(const std::string& id) {
  auto ids = scenarios::scenario_ids();
  return std::find(ids.begin(), ids.end(), id) != ids.end();
}

std::pair<std::string, std::string> split_binding(const std::string& arg) {
  auto eq = arg.find('=');
  if (eq == std::string::npos || eq == 0 || eq + 1 == arg.size())
    throw UsageError("malformed binding '" + arg + "', expected name=value");
  return {arg.substr(0, eq), arg.substr(eq + 1)};
}

Rational parse_value(const std::string& name, const std::string& text) {
  try {
    return Rational::parse(text);
  } catch (const std::exception&) {
    throw UsageError("malformed value for " + name + ": '" + text + "'");
  }
}

// Bindings like a=2 or k=1/2; at most one sweep like d=4..10 when sweep is non-null.
Assignment parse_bindings(const std::vector<std::string>& args, std::optional<Sweep>* sweep) {
  static const std::regex range(R"((-?\d+)\.\.(-?\d+))");
  Assignment out;
  for (const auto& arg : args) {
    auto [name, text] = split_binding(arg);
    std::smatch m;
    if (sweep && std::regex_match(text, m, range)) {
      if (*sweep) throw UsageError("only one sweep is supported");
      Sweep s{name, std::stol(m[1]), std::stol(m[2])};
      if (s.lo > s.hi) throw UsageError("reversed sweep bounds in '" + arg + "'");
      *sweep = s;
      continue;
    }
    if (out.count(name)) throw UsageError("parameter " + name + " bound twice");
    out[name] = parse_value(name, text);
  }
  return out;
}

void write_output(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot write " + path);
  f << text;
}

std::string render(const report::VerifyDoc& d, const std::string& format) {
  if (format == "json") return report::emit_json(d);
  if (format == "csv") return report::emit_csv(d);
  return report::emit_text(d);
}

std::string render(const report::TableDoc& t, const std::string& format) {
  if (format == "json") return report::emit_json(t);
  if (format == "text") return report::emit_text(t);
  return report::emit_csv(t);
}

std::vector<Assignment> plucker_examples() {
  return {{{"d", 4}, {"mu1", 3}, {"kappa", 3}, {"dstar", 0}, {"kappastar", 0}},
          {{"d", 8}, {"mu1", 4}, {"kappa", 12}},
          {{"d", 4}, {"mu1", 12}, {"kappa", 0}}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Intersection-theory checks for focal surfaces of line congruences"};
  app.require_subcommand(1);
  std::string verify_format = "text", run_format = "text", table_format = "csv", out;
  auto add_common = [&](CLI::App* cmd, std::string& format) {
    cmd->add_option("--format", format, "text, json or csv")->check(CLI::IsMember({"text", "json", "csv"}));
    cmd->add_option("--out", out, "Write to FILE instead of standard output");
  };

  std::string suite = "all";
  auto* verify = app.add_subcommand("verify", "Run scenarios symbolically and print the reconciliation ledger");
  verify->add_option("suite,--suite", suite, "all, focal, jets, bisecants, tangency or plucker");
  add_common(verify, verify_format);

  std::string scenario;
  std::vector<std::string> args;
  auto* run = app.add_subcommand("run", "Run one scenario with parameters bound, e.g. run focal a=2 b=2");
  run->add_option("scenario", scenario, "Scenario id")->required();
  run->add_option("bindings", args, "name=value");
  add_common(run, run_format);

  std::string table_scenario;
  std::vector<std::string> table_args;
  auto* table = app.add_subcommand("table", "Sweep one integer parameter, e.g. table tangency d=4..10");
  table->add_option("scenario", table_scenario, "Scenario id")->required();
  table->add_option("bindings", table_args, "name=lo..hi and fixed name=value");
  add_common(table, table_format);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*verify) {
      std::vector<scenarios::ScenarioReport> reports;
      if (suite == "all") {
        for (const auto& id : scenarios::scenario_ids()) reports.push_back(scenarios::run_scenario(id));
      } else if (known_scenario(suite)) {
        reports.push_back(scenarios::run_scenario(suite));
      } else {
        throw UsageError("unknown suite '" + suite + "'");
      }
      auto doc = report::make_verify_doc(suite, reports);
      write_output(render(doc, verify_format), out);
      return report::exit_code(doc);
    }
    if (*run) {
      if (!known_scenario(scenario)) throw UsageError("unknown scenario '" + scenario + "'");
      Assignment b = parse_bindings(args, nullptr);
      scenarios::ScenarioReport rep;
      try {
        rep = scenarios::run_scenario(scenario, b);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      auto doc = report::make_verify_doc(scenario, {rep});
      write_output(render(doc, run_format), out);
      return report::exit_code(doc);
    }
    if (*table) {
      if (!known_scenario(table_scenario)) throw UsageError("unknown scenario '" + table_scenario + "'");
      std::optional<Sweep> sweep;
      Assignment fixed = parse_bindings(table_args, &sweep);
      std::vector<Assignment> points;
      if (sweep) {
        if (fixed.count(sweep->name)) throw UsageError("parameter " + sweep->name + " bound twice");
        for (long v = sweep->lo; v <= sweep->hi; ++v) {
          Assignment p = fixed;
          p[sweep->name] = Rational(v);
          points.push_back(std::move(p));
        }
      } else if (table_scenario == "plucker" && fixed.empty()) {
        points = plucker_examples();
      } else {
        throw UsageError("table needs a sweep such as d=4..10");
      }
      std::vector<scenarios::ScenarioReport> reports;
      try {
        for (const auto& p : points) reports.push_back(scenarios::run_scenario(table_scenario, p));
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      write_output(render(report::make_table(table_scenario, reports), table_format), out);
      auto doc = report::make_verify_doc(table_scenario, reports);
      return report::exit_code(doc);
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
