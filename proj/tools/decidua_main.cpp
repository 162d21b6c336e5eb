// Command-line front end: law suites, truth tables, decisions of maps,
// the predicate/decision roundtrip, and the flowchart interpreter.

#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "decidua/coproducts.hpp"
#include "decidua/decision.hpp"
#include "decidua/errors.hpp"
#include "decidua/flowchart/parser.hpp"
#include "decidua/flowchart/semantics.hpp"
#include "decidua/generators.hpp"
#include "decidua/json_io.hpp"
#include "decidua/kleene.hpp"
#include "decidua/laws.hpp"
#include "decidua/logic.hpp"

namespace {

using namespace decidua;

int cmd_laws(const std::string& suite, bool exhaustive_flag, long random_trials,
             std::uint64_t seed, int max_size, const std::string& json_path) {
  RunOptions opts;
  if (random_trials > 0) {
    opts.exhaustive = false;
    opts.trials = random_trials;
    opts.seed = seed;
  }
  (void)exhaustive_flag;  // exhaustive is the default; the flag documents it
  opts.max_size = max_size;

  LawReport report = run_suite(suite, opts);
  std::cout << "suite=" << report.suite << " cases=" << report.cases
            << " failures=" << report.failures.size();
  if (report.seed) std::cout << " seed=" << *report.seed;
  std::cout << " ms=" << report.ms << "\n";
  for (const LawFailure& f : report.failures) {
    std::cout << "  FAIL " << f.law << "\n";
    for (const auto& w : f.counterexample) {
      std::cout << "    " << w.dump() << "\n";
    }
  }
  if (!json_path.empty()) {
    std::ofstream out(json_path);
    if (!out) {
      std::cerr << "cannot write '" << json_path << "'\n";
      return 1;
    }
    out << report_to_json(report).dump(2) << "\n";
  }
  return report.passed() ? 0 : 1;
}

void print_unary_row(std::ostream& os, const char* label,
                     const std::function<Kleene3(Kleene3)>& fn) {
  os << "  " << label << " |";
  for (Kleene3 a : kKleeneValues) os << " " << to_char(fn(a));
  os << "\n";
}

void print_binary_table(std::ostream& os, const char* title,
                        const std::function<Kleene3(Kleene3, Kleene3)>& fn) {
  os << title << "\n    |";
  for (Kleene3 b : kKleeneValues) os << " " << to_char(b);
  os << "\n  --+------\n";
  for (Kleene3 a : kKleeneValues) {
    os << "  " << to_char(a) << " |";
    for (Kleene3 b : kKleeneValues) os << " " << to_char(fn(a, b));
    os << "\n";
  }
}

int cmd_truthtable() {
  FinObj x = canonical_atom(1);
  const std::string& e = x.elems()[0];
  auto dv = [&](Kleene3 v) { return decision_from_valuation(x, {{e, v}}); };
  auto not_via_dec = [&](Kleene3 a) { return read_pointwise(neg(dv(a)), e); };
  auto and_via_dec = [&](Kleene3 a, Kleene3 b) {
    return read_pointwise(conj(dv(a), dv(b)), e);
  };
  auto or_via_dec = [&](Kleene3 a, Kleene3 b) {
    return read_pointwise(disj(dv(a), dv(b)), e);
  };

  std::cout << "reference tables\n";
  std::cout << "negation\n    | t f u\n";
  print_unary_row(std::cout, "!", [](Kleene3 a) { return weak_not(a); });
  print_binary_table(std::cout, "conjunction",
                     [](Kleene3 a, Kleene3 b) { return weak_and(a, b); });
  print_binary_table(std::cout, "disjunction",
                     [](Kleene3 a, Kleene3 b) { return weak_or(a, b); });

  std::cout << "\nvia decisions on a one-element carrier\n";
  std::cout << "negation\n    | t f u\n";
  print_unary_row(std::cout, "!", not_via_dec);
  print_binary_table(std::cout, "conjunction", and_via_dec);
  print_binary_table(std::cout, "disjunction", or_via_dec);

  bool agree = read_pointwise(top(x), e) == Kleene3::True &&
               read_pointwise(bot(x), e) == Kleene3::False;
  for (Kleene3 a : kKleeneValues) {
    agree = agree && not_via_dec(a) == weak_not(a);
    for (Kleene3 b : kKleeneValues) {
      agree = agree && and_via_dec(a, b) == weak_and(a, b) &&
              or_via_dec(a, b) == weak_or(a, b);
    }
  }
  std::cout << "\nunits: top reads t, bot reads f\n";
  std::cout << (agree ? "tables agree\n" : "TABLES DISAGREE\n");
  return agree ? 0 : 1;
}

int cmd_decide(const std::string& in_path, const std::string& out_path) {
  PMap f = load_pmap_file(in_path);
  Decision d = decide(f);
  nlohmann::json j = pmap_to_json(d.underlying());
  if (out_path.empty()) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::ofstream out(out_path);
    if (!out) {
      std::cerr << "cannot write '" << out_path << "'\n";
      return 1;
    }
    out << j.dump(2) << "\n";
  }
  return 0;
}

int cmd_duality(const std::string& in_path, const std::string& along_path) {
  PMap p = load_pmap_file(in_path);
  Decision d = pred_to_dec(p);
  std::cout << "decision:\n" << pmap_to_json(d.underlying()).dump(2) << "\n";

  bool ok = dec_to_pred(d) == p;
  std::cout << "roundtrip to predicate: " << (ok ? "ok" : "FAILED") << "\n";

  if (!along_path.empty()) {
    PMap g = load_pmap_file(along_path);
    Decision transported = transform(g, d);
    bool natural = dec_to_pred(transported) == compose(p, g) &&
                   pred_to_dec(compose(p, g)) == transported;
    std::cout << "naturality along " << along_path << ": "
              << (natural ? "ok" : "FAILED") << "\n";
    ok = ok && natural;
  }
  return ok ? 0 : 1;
}

flowchart::State initial_state(const flowchart::StateSpace& space,
                               const std::string& assignments) {
  flowchart::State s;
  for (const auto& [name, bound] : space.vars()) {
    (void)bound;
    s[name] = 0;
  }
  std::stringstream ss(assignments);
  std::string piece;
  while (std::getline(ss, piece, ',')) {
    if (piece.empty()) continue;
    auto eq = piece.find('=');
    if (eq == std::string::npos) {
      throw Error("bad --state entry '" + piece + "', expected name=value");
    }
    std::string name = piece.substr(0, eq);
    long value = std::stol(piece.substr(eq + 1));
    auto bound = space.bound_of(name);
    if (!bound) throw Error("--state mentions undeclared variable '" + name + "'");
    if (value < 0 || value > *bound) {
      throw Error("--state value for '" + name + "' is out of range");
    }
    s[name] = value;
  }
  return s;
}

int cmd_run(const std::string& program_path, const std::string& state_arg,
            bool compare) {
  std::ifstream in(program_path);
  if (!in) {
    std::cerr << "cannot open '" << program_path << "'\n";
    return 1;
  }
  std::string source((std::istreambuf_iterator<char>(in)),
                     std::istreambuf_iterator<char>());
  flowchart::Module mod = flowchart::parse_program(source);

  flowchart::State start = initial_state(mod.space, state_arg);
  auto result = flowchart::run_operational(mod.body, mod.space, start);
  std::cout << "initial: " << mod.space.encode(start) << "\n";
  std::cout << "result:  " << (result ? mod.space.encode(*result) : "undefined")
            << "\n";

  if (!compare) return 0;

  PMap den = flowchart::denote(mod.body, mod.space);
  long disagreements = 0;
  for (const flowchart::State& s : mod.space.states()) {
    auto operational = flowchart::run_operational(mod.body, mod.space, s);
    auto denotational = den.value_at(mod.space.encode(s));
    bool agree =
        operational.has_value() == denotational.has_value() &&
        (!operational || mod.space.encode(*operational) == *denotational);
    if (!agree) {
      ++disagreements;
      std::cout << "DISAGREE at " << mod.space.encode(s) << ": operational "
                << (operational ? mod.space.encode(*operational) : "undefined")
                << ", denotational "
                << (denotational ? *denotational : "undefined") << "\n";
    }
  }
  std::cout << "compared " << mod.space.state_count() << " states, "
            << disagreements << " disagreements\n";
  return disagreements == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite partial maps, decisions, and their three-valued logic"};
  app.require_subcommand(1);

  auto* laws = app.add_subcommand("laws", "run a law suite");
  std::string suite_name;
  bool exhaustive_flag = false;
  long random_trials = 0;
  std::uint64_t seed = 0;
  int max_size = -1;
  std::string json_path;
  laws->add_option("--suite", suite_name, "suite to run")->required();
  laws->add_flag("--exhaustive", exhaustive_flag,
                 "enumerate every instance (default)");
  laws->add_option("--random", random_trials,
                   "run this many random trials per generator instead");
  laws->add_option("--seed", seed, "seed for random mode");
  laws->add_option("--max-size", max_size, "override the object size caps");
  laws->add_option("--json", json_path, "also write the report as JSON");

  auto* truthtable =
      app.add_subcommand("truthtable", "print the three-valued tables, both "
                                       "from the reference semantics and via "
                                       "decisions, and check they agree");

  auto* dec = app.add_subcommand("decide", "compute the decision of a map "
                                           "into a binary sum");
  std::string dec_in, dec_out;
  dec->add_option("--in", dec_in, "input map (JSON)")->required();
  dec->add_option("--out", dec_out, "output file (default stdout)");

  auto* duality = app.add_subcommand(
      "duality", "decision of a predicate, roundtrip, and naturality");
  std::string dual_in, dual_along;
  duality->add_option("--in", dual_in, "predicate into 1+1 (JSON)")->required();
  duality->add_option("--along", dual_along,
                      "map to transport the decision along (JSON)");

  auto* run = app.add_subcommand("run", "execute a flowchart program");
  std::string program_path, state_arg;
  bool compare = false;
  run->add_option("--program", program_path, "program file")->required();
  run->add_option("--state", state_arg,
                  "initial state as name=value,... (missing variables are 0)");
  run->add_flag("--compare", compare,
                "also build the denotation and compare it on every state");

  CLI11_PARSE(app, argc, argv);

  try {
    if (laws->parsed()) {
      return cmd_laws(suite_name, exhaustive_flag, random_trials, seed,
                      max_size, json_path);
    }
    if (truthtable->parsed()) return cmd_truthtable();
    if (dec->parsed()) return cmd_decide(dec_in, dec_out);
    if (duality->parsed()) return cmd_duality(dual_in, dual_along);
    if (run->parsed()) return cmd_run(program_path, state_arg, compare);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
