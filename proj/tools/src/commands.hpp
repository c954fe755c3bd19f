#pragma once

#include <optional>
#include <string>

#include "fluxkit_cli/app.hpp"
#include "fluxkit_cli/scenario.hpp"

namespace fluxkit::cli {

// Collects named pass/fail checks; remembers the first failure.
class Checker {
 public:
  void check(const std::string& name, bool ok, const std::string& detail = "");

  bool ok() const noexcept { return !first_failure_.has_value(); }
  const std::optional<std::string>& first_failure() const noexcept { return first_failure_; }
  const json& checks() const noexcept { return checks_; }

 private:
  json checks_ = json::array();
  std::optional<std::string> first_failure_;
};

using CommandFn = void (*)(const json& scenario, const Options& opt, Checker& ck, json& results);

void cmd_twist_matrix(const json&, const Options&, Checker&, json&);
void cmd_check_relations(const json&, const Options&, Checker&, json&);
void cmd_johnson(const json&, const Options&, Checker&, json&);
void cmd_contract(const json&, const Options&, Checker&, json&);
void cmd_theorem_a(const json&, const Options&, Checker&, json&);
void cmd_theorem_b(const json&, const Options&, Checker&, json&);
void cmd_sh1_verify(const json&, const Options&, Checker&, json&);
void cmd_flux_annulus(const json&, const Options&, Checker&, json&);
void cmd_hyp_area(const json&, const Options&, Checker&, json&);

}  // namespace fluxkit::cli
