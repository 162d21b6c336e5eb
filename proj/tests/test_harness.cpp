#include "doctest.h"

#include <random>
#include <set>

#include "decidua/errors.hpp"
#include "decidua/generators.hpp"
#include "decidua/json_io.hpp"
#include "decidua/laws.hpp"

using namespace decidua;

TEST_CASE("enumeration counts and determinism") {
  CHECK(enumerate_pmaps(canonical_atom(1), canonical_atom(1)).size() == 2);
  CHECK(enumerate_pmaps(canonical_atom(2), canonical_atom(1)).size() == 4);
  CHECK(enumerate_pmaps(canonical_atom(0), canonical_atom(3)).size() == 1);
  CHECK(enumerate_pmaps(canonical_atom(3), canonical_atom(3)).size() == 64);

  // each map exactly once, in a reproducible order
  auto first = enumerate_pmaps(canonical_atom(2), canonical_atom(2));
  auto second = enumerate_pmaps(canonical_atom(2), canonical_atom(2));
  REQUIRE(first.size() == second.size());
  std::set<std::string> seen;
  for (std::size_t i = 0; i < first.size(); ++i) {
    CHECK(first[i] == second[i]);
    seen.insert(pmap_to_json(first[i]).dump());
  }
  CHECK(seen.size() == first.size());

  CHECK_THROWS_AS(enumerate_pmaps(canonical_atom(5), canonical_atom(1)),
                  CapExceededError);
}

TEST_CASE("random maps are reproducible and sensibly distributed") {
  FinObj x = canonical_atom(4), y = canonical_atom(3);
  CHECK(random_pmap(x, y, std::uint64_t{42}) ==
        random_pmap(x, y, std::uint64_t{42}));
  CHECK(random_pmap(x, y, std::uint64_t{42}).dom() == x);

  std::mt19937_64 rng(2026);
  long undefined = 0, total = 0;
  for (int t = 0; t < 10000; ++t) {
    PMap f = random_pmap(x, y, rng);
    total += static_cast<long>(x.size());
    undefined += static_cast<long>(x.size() - f.graph().size());
  }
  double freq = static_cast<double>(undefined) / static_cast<double>(total);
  CHECK(freq > 0.31);
  CHECK(freq < 0.35);
}

TEST_CASE("suite runner basics") {
  RunOptions small;
  small.max_size = 2;
  LawReport r = run_suite("restriction", small);
  CHECK(r.passed());
  CHECK(r.suite == "restriction");
  CHECK(r.cases > 0);
  CHECK_FALSE(r.seed.has_value());

  CHECK_THROWS_AS(run_suite("nonsense", small), UnknownSuiteError);
}

TEST_CASE("random runs reproduce exactly from their seed") {
  RunOptions opts;
  opts.exhaustive = false;
  opts.trials = 40;
  opts.seed = 12345;
  LawReport a = run_suite("utility", opts);
  LawReport b = run_suite("utility", opts);
  CHECK(a.cases == b.cases);
  CHECK(a.failures.size() == b.failures.size());
  CHECK(a.passed());
  CHECK(a.seed == std::uint64_t{12345});
}

TEST_CASE("the report serializes to the documented shape") {
  RunOptions small;
  small.max_size = 1;
  nlohmann::json j = report_to_json(run_suite("bridge", small));
  CHECK(j.size() == 5);
  CHECK(j.contains("suite"));
  CHECK(j.contains("cases"));
  CHECK(j.contains("failures"));
  CHECK(j.contains("seed"));
  CHECK(j.contains("ms"));
  CHECK(j["seed"].is_null());
  CHECK(j["failures"].is_array());

  RunOptions rnd;
  rnd.exhaustive = false;
  rnd.trials = 5;
  rnd.seed = 7;
  nlohmann::json jr = report_to_json(run_suite("dmq", rnd));
  CHECK(jr["seed"] == 7);
}

TEST_CASE("the bridge suite covers every pair on the two-element carrier") {
  LawReport r = run_suite("bridge");
  CHECK(r.law_cases.at("bridge-pointwise-conj") >= 81);
  CHECK(r.law_cases.at("bridge-pointwise-disj") >= 81);
}

TEST_CASE("core laws also hold on random larger instances") {
  RunOptions rnd;
  rnd.exhaustive = false;
  rnd.trials = 1000;
  rnd.seed = 31337;
  CHECK(run_suite("restriction", rnd).passed());
  CHECK(run_suite("order", rnd).passed());
}

TEST_CASE("every documented law is exercised by its suite") {
  for (const std::string& name : suite_names()) {
    LawReport r = run_suite(name);
    const auto& documented = documented_laws().at(name);
    std::set<std::string> expected(documented.begin(), documented.end());
    CHECK_MESSAGE(r.exercised == expected, name);
    CHECK_MESSAGE(r.passed(), name);
  }
}

TEST_CASE("forcing non-total decisions into the Boolean laws is caught") {
  RunOptions opts;
  opts.max_size = 2;
  opts.inject_nontotal_boolean = true;
  LawReport r = run_suite("boolean", opts);
  CHECK_FALSE(r.passed());
  bool all_absorption = true;
  for (const LawFailure& f : r.failures) {
    all_absorption = all_absorption && f.law == "bool-absorption-conj";
    CHECK_FALSE(f.counterexample.empty());
    // counterexamples replay as standalone maps
    for (const auto& w : f.counterexample) {
      CHECK_NOTHROW(pmap_from_json(w));
    }
  }
  CHECK(all_absorption);
}
