#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"

namespace decidua {

struct RunOptions {
  bool exhaustive = true;
  long trials = 1000;            // random mode only
  std::uint64_t seed = 0;        // random mode only
  int max_size = -1;             // -1 keeps each suite's default caps
  // Demonstration hook: additionally runs the Boolean absorption law over
  // arbitrary (not necessarily total) decisions, which must produce recorded
  // counterexamples.
  bool inject_nontotal_boolean = false;
};

struct LawFailure {
  std::string law;
  std::vector<nlohmann::json> counterexample;  // replayable maps
};

struct LawReport {
  std::string suite;
  std::int64_t cases = 0;
  std::vector<LawFailure> failures;
  std::optional<std::uint64_t> seed;  // absent for exhaustive runs
  std::int64_t ms = 0;

  // Bookkeeping beyond the wire format.
  std::map<std::string, std::int64_t> law_cases;
  std::set<std::string> exercised;

  bool passed() const { return failures.empty(); }
};

// {"suite": str, "cases": int, "failures": [...], "seed": int|null, "ms": int}
nlohmann::json report_to_json(const LawReport& report);

// Runs one law suite. Throws UnknownSuiteError for names outside
// suite_names(). Exhaustive runs enumerate every instance up to the suite's
// size caps; random runs draw opts.trials instances per generator from
// opts.seed and are reproducible.
LawReport run_suite(const std::string& name, const RunOptions& opts = {});

const std::vector<std::string>& suite_names();

// Every law id each suite is expected to exercise; the registry the
// completeness self-test checks against.
const std::map<std::string, std::vector<std::string>>& documented_laws();

}  // namespace decidua
