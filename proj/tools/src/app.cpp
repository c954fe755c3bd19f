#include "fluxkit_cli/app.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <ostream>

#include <CLI11.hpp>

#include "commands.hpp"

#ifndef FLUXKIT_SCENARIO_DIR
#define FLUXKIT_SCENARIO_DIR "scenarios"
#endif

namespace fluxkit::cli {
namespace {

namespace fs = std::filesystem;

const std::map<std::string, CommandFn>& command_table() {
  static const std::map<std::string, CommandFn> table = {
      {"twist-matrix", cmd_twist_matrix},     {"check-relations", cmd_check_relations},
      {"johnson", cmd_johnson},               {"contract", cmd_contract},
      {"theorem-a", cmd_theorem_a},           {"theorem-b", cmd_theorem_b},
      {"sh1-verify", cmd_sh1_verify},         {"flux-annulus", cmd_flux_annulus},
      {"hyp-area", cmd_hyp_area},
  };
  return table;
}

RunResult schema_failure(const std::string& command, const std::string& message) {
  RunResult r;
  r.exit_code = kSchemaError;
  r.report = {{"command", command}, {"status", "error"}, {"exit_code", kSchemaError}, {"error", message}};
  return r;
}

std::string text_line(const json& report) {
  const std::string status = report.value("status", "error");
  std::string line = status == "pass" ? "PASS" : status == "fail" ? "FAIL" : "ERROR";
  line += " " + report.value("command", std::string{});
  if (report.contains("name") && !report["name"].get<std::string>().empty()) {
    line += " [" + report["name"].get<std::string>() + "]";
  }
  if (report.contains("first_failure") && report["first_failure"].is_string()) {
    line += ": " + report["first_failure"].get<std::string>();
  }
  if (report.contains("error")) line += ": " + report["error"].get<std::string>();
  return line;
}

}  // namespace

const std::vector<std::string>& subcommands() {
  static const std::vector<std::string> names = {
      "twist-matrix", "check-relations", "johnson",      "contract", "theorem-a",
      "theorem-b",    "sh1-verify",      "flux-annulus", "hyp-area", "regress",
  };
  return names;
}

std::string bundled_scenario_dir() { return FLUXKIT_SCENARIO_DIR; }

RunResult run_command(const std::string& command, const json& scenario, const Options& opt) {
  const auto it = command_table().find(command);
  if (it == command_table().end()) return schema_failure(command, "unknown subcommand '" + command + "'");

  Checker ck;
  json results = json::object();
  std::string name, paper_ref;
  try {
    if (!scenario.is_object()) throw SchemaError("scenario must be a JSON object");
    if (get_int(scenario, "version") != kScenarioVersion) {
      throw SchemaError("unsupported scenario version (expected " + std::to_string(kScenarioVersion) + ")");
    }
    if (scenario.contains("name")) name = get_string(scenario, "name");
    if (scenario.contains("paper_ref")) paper_ref = get_string(scenario, "paper_ref");
    if (scenario.contains("command") && get_string(scenario, "command") != command) {
      throw SchemaError("scenario is for '" + scenario["command"].get<std::string>() + "', not '" + command + "'");
    }
    it->second(scenario, opt, ck, results);
  } catch (const SchemaError& e) {
    return schema_failure(command, e.what());
  } catch (const json::exception& e) {
    return schema_failure(command, e.what());
  } catch (const DimensionError& e) {
    return schema_failure(command, e.what());
  } catch (const ConfigurationError& e) {
    return schema_failure(command, e.what());
  } catch (const PreconditionError& e) {
    ck.check("precondition", false, e.what());
  }

  RunResult r;
  r.exit_code = ck.ok() ? kPass : kCheckFailed;
  r.report = {
      {"command", command},
      {"name", name},
      {"paper_ref", paper_ref},
      {"status", ck.ok() ? "pass" : "fail"},
      {"exit_code", r.exit_code},
      {"first_failure", ck.first_failure() ? json(*ck.first_failure()) : json(nullptr)},
      {"checks", ck.checks()},
      {"results", results},
  };
  return r;
}

RunResult run_file(const std::string& command, const std::string& path, const Options& opt) {
  std::ifstream in(path);
  if (!in) return schema_failure(command, "cannot read scenario '" + path + "'");
  json scenario;
  try {
    scenario = json::parse(in);
  } catch (const json::parse_error& e) {
    return schema_failure(command, std::string("malformed JSON: ") + e.what());
  }
  return run_command(command, scenario, opt);
}

RunResult run_regress(const std::string& path, const Options& opt) {
  std::vector<fs::path> files;
  std::error_code ec;
  if (fs::is_directory(path, ec)) {
    for (const auto& entry : fs::directory_iterator(path)) {
      if (entry.is_regular_file() && entry.path().extension() == ".json") files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end());
  } else if (fs::is_regular_file(path, ec)) {
    files.push_back(path);
  } else {
    return schema_failure("regress", "no scenario directory or file at '" + path + "'");
  }
  if (files.empty()) return schema_failure("regress", "no scenarios found in '" + path + "'");

  json entries = json::array();
  std::optional<std::string> first_failure;
  for (const auto& file : files) {
    json scenario;
    {
      std::ifstream in(file);
      try {
        scenario = json::parse(in);
      } catch (const json::parse_error& e) {
        return schema_failure("regress", file.filename().string() + ": malformed JSON");
      }
    }
    if (!scenario.is_object() || !scenario.contains("command") || !scenario["command"].is_string()) {
      return schema_failure("regress", file.filename().string() + ": missing 'command'");
    }
    const std::string command = scenario["command"].get<std::string>();
    int expected_exit = kPass;
    const json expect = scenario.value("expect", json::object());
    if (expect.contains("exit")) expected_exit = expect["exit"].get<int>();

    const RunResult r = run_command(command, scenario, opt);
    std::vector<std::string> problems;
    if (r.exit_code != expected_exit) {
      problems.push_back("exit " + std::to_string(r.exit_code) + ", expected " + std::to_string(expected_exit));
    }
    if (expect.contains("fluxes")) {
      json got = json::array();
      if (r.report.contains("results") && r.report["results"].contains("targets")) {
        for (const auto& t : r.report["results"]["targets"]) got.push_back(t["flux"]);
      }
      json want = json::array();
      for (const auto& f : expect["fluxes"]) want.push_back(f.is_null() ? f : to_json(parse_rational(f)));
      if (got != want) problems.push_back("fluxes " + got.dump() + ", expected " + want.dump());
    }
    const bool ok = problems.empty();
    json entry = {
        {"file", file.filename().string()},
        {"command", command},
        {"name", r.report.value("name", std::string{})},
        {"paper_ref", r.report.value("paper_ref", std::string{})},
        {"exit_code", r.exit_code},
        {"expected_exit", expected_exit},
        {"status", ok ? "pass" : "fail"},
        {"detail", r.report.contains("first_failure") ? r.report["first_failure"]
                   : r.report.contains("error")       ? r.report["error"]
                                                      : json(nullptr)},
    };
    if (!ok && !first_failure) first_failure = file.filename().string() + ": " + problems.front();
    entries.push_back(std::move(entry));
  }

  RunResult out;
  out.exit_code = first_failure ? kCheckFailed : kPass;
  out.report = {
      {"command", "regress"},
      {"status", first_failure ? "fail" : "pass"},
      {"exit_code", out.exit_code},
      {"first_failure", first_failure ? json(*first_failure) : json(nullptr)},
      {"scenarios", entries},
  };
  return out;
}

int main_entry(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"fluxkit: exact and numerical checks for flux maps on surface mapping classes"};
  app.require_subcommand(1);

  std::string scenario;
  double tolerance = 0;
  unsigned long long seed = 0;
  bool as_json = false;
  std::map<std::string, CLI::App*> subs;
  const std::map<std::string, std::string> help = {
      {"twist-matrix", "Sp(2g, Z) matrix of a Dehn twist word"},
      {"check-relations", "verify commuting/braid/star/chain relations on homology"},
      {"johnson", "Johnson homomorphism of a word of conjugated point-pushes"},
      {"contract", "contracted Johnson value Phi(tau(w))"},
      {"theorem-a", "section flux equals g/(g-1) D^-1 Phi tau on push words"},
      {"theorem-b", "predicted Jacobian flux Flsec - D^-1 Phi tau"},
      {"sh1-verify", "strange-homology Hamiltonian certificate"},
      {"flux-annulus", "numerical flux on a flat annulus"},
      {"hyp-area", "hyperbolic Gauss-Bonnet areas"},
      {"regress", "run all bundled scenarios"},
  };
  for (const auto& name : subcommands()) {
    CLI::App* sub = app.add_subcommand(name, help.at(name));
    sub->add_option("--scenario", scenario, "scenario JSON file (a directory for regress)");
    sub->add_option("--tolerance", tolerance, "override numeric tolerances");
    sub->add_flag("--json", as_json, "print the machine-readable report");
    sub->add_option("--seed", seed, "seed for randomized words");
    subs[name] = sub;
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kPass : kSchemaError;
  }

  std::string command;
  for (const auto& [name, sub] : subs)
    if (sub->parsed()) command = name;
  const CLI::App* sub = subs.at(command);

  Options opt;
  if (sub->count("--tolerance")) {
    if (!(tolerance > 0) || !std::isfinite(tolerance)) {
      err << "--tolerance must be a positive number\n";
      return kSchemaError;
    }
    opt.tolerance = tolerance;
  }
  if (sub->count("--seed")) opt.seed = seed;

  RunResult r;
  if (command == "regress") {
    r = run_regress(scenario.empty() ? bundled_scenario_dir() : scenario, opt);
  } else if (scenario.empty()) {
    r = schema_failure(command, "--scenario is required");
  } else {
    r = run_file(command, scenario, opt);
  }

  if (as_json) {
    out << r.report.dump(2) << "\n";
  } else if (command == "regress" && r.report.contains("scenarios")) {
    for (const auto& s : r.report["scenarios"]) {
      out << (s["status"] == "pass" ? "PASS " : "FAIL ") << s["file"].get<std::string>() << " ("
          << s["command"].get<std::string>() << ", exit " << s["exit_code"].get<int>() << ")\n";
    }
    out << text_line(r.report) << "\n";
  } else {
    out << text_line(r.report) << "\n";
  }
  return r.exit_code;
}

}  // namespace fluxkit::cli
