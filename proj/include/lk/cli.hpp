#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lk/balanced_form.hpp"

namespace lk {

// One named system from a job config: the parameter array, plus the case
// parameters when the entry was declared in case form.
struct SystemEntry {
  std::optional<CaseParams> case_params;
  ParameterArray array;
};

// A parsed invocation. Scalar literals in the config are exact strings
// ("-8", "4/3", "[0,1]") or plain integers; decimal floats are rejected.
// The field descriptor is {"kind":"rational"}, {"kind":"prime","p":5} or
// {"kind":"extension","p":2,"modulus":[1,1,1]}.
struct JobConfig {
  std::string command;
  FieldSpecPtr field;
  std::vector<std::pair<std::string, SystemEntry>> systems;  // declaration order

  std::optional<std::string> system;  // validate
  bool axioms = false;                // validate: also run LS1..LS5

  std::optional<std::string> source;  // descend, form, ortho
  std::optional<std::string> target;
  std::optional<int> rho;
  std::optional<int> d_prime;  // descend: search for feasible targets

  bool induce = false;             // form: rebuild the target from the pairing
  std::vector<std::string> chain;  // form: compose mode
  std::vector<int> rhos;           // form: endpoints of the chain steps

  std::optional<std::pair<int, int>> indices;  // ortho: report a single sum
  struct KrawtchoukJob {
    int d;
    int d_prime;
    int rho;
    FieldElement p;
  };
  std::optional<KrawtchoukJob> krawtchouk;  // ortho: 2F1 identity mode

  const SystemEntry& entry(const std::string& name) const;  // ConfigParse if absent
};

// Parses and resolves a config for the given command: field construction,
// system instantiation, command-key whitelisting. Malformed input raises
// ConfigParse; scalar and case errors keep their own kinds.
JobConfig parse_job_config(const std::string& command, const std::string& config_text);

// What a command reports: named exact facts (echoes and witnesses), named
// pass/fail verdicts, named exact matrices and free-text notes, in a fixed
// order. exit_code is 0 when every verdict passed, 1 for a mathematical
// failure, 2 for a usage or config error.
struct Report {
  std::string command;
  std::vector<std::pair<std::string, std::string>> facts;
  std::vector<ConditionReport> verdicts;
  std::vector<std::pair<std::string, Matrix>> matrices;
  std::vector<std::string> notes;
  int exit_code = 0;

  void fact(const std::string& name, const std::string& value);
  void verdict(const std::string& name, bool pass, const std::string& detail = "");
  const ConditionReport& find_verdict(const std::string& name) const;
};

Report cmd_validate(const JobConfig& job);
Report cmd_descend(const JobConfig& job);
Report cmd_form(const JobConfig& job);
Report cmd_ortho(const JobConfig& job);

// Parse + dispatch; never throws. Errors become a report with a single
// "error:" note and the exit code mandated by the kind: usage and config
// kinds exit 2, mathematical refusals exit 1.
Report run_command(const std::string& command, const std::string& config_text);

std::string render_text(const Report& report);
std::string render_json(const Report& report);

}  // namespace lk
