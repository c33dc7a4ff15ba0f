#pragma once
#include <optional>
#include <string>
#include <vector>

#include "segre/spec.hpp"

namespace segre {

struct RunFlags {
  std::optional<EngineChoice> engine;
  std::optional<std::uint64_t> seed;
  std::optional<long> samples;
  std::optional<std::vector<double>> epsilon_schedule;
  std::optional<double> radius;
  std::optional<Extrapolation> extrapolation;
  bool skip_numeric = false;
};

struct Check {
  std::string name;
  json expected;
  json got;
  bool pass = false;
  bool skipped = false;
};

struct RunOutcome {
  json report;
  int exit_code = 0;
  std::string message;  // diagnostics for stderr
  std::vector<Check> checks;
};

const char* version_string();

void apply_flags(MorphismSpec& spec, const RunFlags& flags);

// Runs the requested tasks; exit code 0 iff all checks pass.
RunOutcome run_spec(MorphismSpec spec, const RunFlags& flags);
// Numeric masses only.
RunOutcome run_mass(MorphismSpec spec, const RunFlags& flags);
// Every fixture in dir with verify forced on, plus a runtime budget check.
RunOutcome run_golden(const std::string& dir, const RunFlags& flags);

json check_to_json(const Check& c);
std::string check_diff(const Check& c);

}  // namespace segre
