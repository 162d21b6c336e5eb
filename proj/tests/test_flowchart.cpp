#include "doctest.h"

#include <filesystem>
#include <fstream>

#include "decidua/coproducts.hpp"
#include "decidua/flowchart/corpus.hpp"
#include "decidua/flowchart/parser.hpp"
#include "decidua/flowchart/semantics.hpp"
#include "decidua/logic.hpp"

using namespace decidua;
using namespace decidua::flowchart;

namespace {

Module parse(const std::string& src) { return parse_program(src); }

std::optional<State> run_from(const Module& m, State s) {
  return run_operational(m.body, m.space, std::move(s));
}

}  // namespace

TEST_CASE("parsing the basic statement forms") {
  Module loop = parse("var b in 0..1; while b = 1 do skip od");
  CHECK(loop.body->kind == Stmt::Kind::While);
  CHECK(loop.space.state_count() == 2);

  // declarations are optional; the state space is then a single empty state
  Module guard = parse("if undef then skip else skip fi");
  CHECK(guard.body->kind == Stmt::Kind::If);
  CHECK(guard.body->guard->kind == Pred::Kind::Undef);
  CHECK(guard.space.state_count() == 1);

  // an assignment that can never land in range still parses
  Module assign = parse("var x in 0..2; x := x + 5");
  CHECK(assign.body->kind == Stmt::Kind::Assign);
}

TEST_CASE("grammar corners") {
  // precedence: not binds the comparison, and binds before or
  Module m = parse("var x in 0..1; if not x = 1 and false or true then skip "
                   "else skip fi");
  const Pred& g = *m.body->guard;
  CHECK(g.kind == Pred::Kind::Or);
  CHECK(g.p->kind == Pred::Kind::And);
  CHECK(g.p->p->kind == Pred::Kind::Not);
  CHECK(g.p->p->p->kind == Pred::Kind::Compare);

  // parenthesized arithmetic on the left of a comparison
  Module cmp = parse("var x in 0..3; if (x + 1) * 2 <= 4 then skip else skip fi");
  CHECK(cmp.body->guard->kind == Pred::Kind::Compare);

  // sequencing is available inside loop and branch bodies without parentheses
  Module seq = parse("var x in 0..3; while x < 3 do x := x + 1; skip od");
  CHECK(seq.body->s1->kind == Stmt::Kind::Seq);
}

TEST_CASE("parse errors carry positions") {
  try {
    parse("var x in 0..1;\nwhile x = 1 do skip");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line == 2);
    CHECK(std::string(e.what()).find("od") != std::string::npos);
  }

  CHECK_THROWS_AS(parse("y := 1"), UndeclaredVariableError);
  CHECK_THROWS_AS(parse("var x in 0..2; y := x"), UndeclaredVariableError);
  CHECK_THROWS_AS(parse("var x in 1..2; skip"), ParseError);
  CHECK_THROWS_AS(parse("var x in 0..2; var x in 0..1; skip"), ParseError);
  CHECK_THROWS_AS(parse("var x in 0..99999999; skip"), BoundOverflowError);
  CHECK_THROWS_AS(parse("var x in 0..999999999999; skip"), BoundOverflowError);
}

TEST_CASE("atomic predicate denotations") {
  Module m = parse("var b in 0..1; skip");
  const StateSpace& sp = m.space;

  PMap d = denote_pred(pred_compare(Pred::CmpOp::Eq, aexp_variable("b"),
                                    aexp_literal(1)),
                       sp);
  CHECK(d.value_at("{b=1}") == tag_left(kUnitElement));
  CHECK(d.value_at("{b=0}") == tag_right(kUnitElement));

  CHECK(denote_pred(pred_const(Pred::Kind::Undef), sp).graph().empty());

  PMap poisoned = denote_pred(
      pred_binary(Pred::Kind::And, pred_const(Pred::Kind::True),
                  pred_const(Pred::Kind::Undef)),
      sp);
  CHECK(poisoned.graph().empty());
}

TEST_CASE("denotations of the statement forms") {
  Module loop = parse("var b in 0..1; while b = 1 do skip od");
  PMap d = denote(loop.body, loop.space);
  CHECK(d.value_at("{b=0}") == "{b=0}");
  CHECK_FALSE(d.defined_at("{b=1}"));

  Module guard = parse("var b in 0..1; if undef then skip else skip fi");
  CHECK(denote(guard.body, guard.space).graph().empty());

  Module nothing = parse("var b in 0..1; skip");
  CHECK(denote(nothing.body, nothing.space) == identity(nothing.space.carrier()));
}

TEST_CASE("big-step execution") {
  Module loop = parse("var b in 0..1; while b = 1 do skip od");
  CHECK_FALSE(run_from(loop, {{"b", 1}}).has_value());  // cycle detected
  auto done = run_from(loop, {{"b", 0}});
  REQUIRE(done.has_value());
  CHECK(done->at("b") == 0);

  Module assign = parse("var x in 0..2; x := x + 5");
  CHECK_FALSE(run_from(assign, {{"x", 0}}).has_value());  // out of range

  Module sub = parse("var x in 0..3; if x - 1 < 2 then x := 0 else x := 3 fi");
  CHECK_FALSE(run_from(sub, {{"x", 0}}).has_value());  // negative intermediate
  auto taken = run_from(sub, {{"x", 2}});
  REQUIRE(taken.has_value());
  CHECK(taken->at("x") == 0);
}

TEST_CASE("loops unroll one step without changing the denotation") {
  Module m = parse("var x in 0..5; while 0 < x do x := x - 1 od");
  StmtPtr loop = m.body;
  StmtPtr unrolled =
      stmt_if(loop->guard, stmt_seq(loop->s1, loop), stmt_skip());
  CHECK(denote(loop, m.space) == denote(unrolled, m.space));
}

TEST_CASE("loop denotations are ascending fixed-point chains from zero") {
  Module m = parse("var x in 0..5; while 0 < x do x := x - 1 od");
  const StateSpace& sp = m.space;
  const FinObj& sigma = sp.carrier();

  Decision guard = pred_to_dec(denote_pred(m.body->guard, sp));
  PMap body = denote(m.body->s1, sp);

  PMap w = zero_map(sigma, sigma);
  long steps = 0;
  while (true) {
    PMap next =
        compose(copair(compose(w, body), identity(sigma)), guard.underlying());
    CHECK(natural_leq(w, next));  // the chain only ever grows
    if (next == w) break;
    w = std::move(next);
    ++steps;
    REQUIRE(steps <= sp.state_count() + 1);
  }
  CHECK(w == denote(m.body, sp));
}

TEST_CASE("both semantics agree on a mixed program") {
  Module m = parse(
      "var n in 0..5; var acc in 0..5;\n"
      "acc := 0;\n"
      "while 0 < n do acc := acc + 1; n := n - 1 od");
  PMap den = denote(m.body, m.space);
  for (const State& s : m.space.states()) {
    auto op = run_from(m, s);
    auto dn = den.value_at(m.space.encode(s));
    CHECK(op.has_value() == dn.has_value());
    if (op && dn) CHECK(m.space.encode(*op) == *dn);
  }
}

TEST_CASE("the shipped program files match the embedded corpus") {
  std::filesystem::path dir(DECIDUA_PROGRAMS_DIR);
  for (const CorpusProgram& prog : bundled_corpus()) {
    std::ifstream in(dir / (prog.name + ".fc"));
    REQUIRE_MESSAGE(in.good(), prog.name);
    std::string text((std::istreambuf_iterator<char>(in)),
                     std::istreambuf_iterator<char>());
    CHECK_MESSAGE(text == prog.source, prog.name);
  }
}

TEST_CASE("state spaces enumerate and encode states consistently") {
  StateSpace sp({{"x", 2}, {"y", 1}});
  CHECK(sp.state_count() == 6);
  CHECK(sp.carrier().size() == 6);
  for (const State& s : sp.states()) {
    CHECK(sp.decode(sp.encode(s)) == s);
  }
  CHECK(sp.carrier().elems().front() == "{x=0,y=0}");
  CHECK(sp.carrier().elems()[1] == "{x=0,y=1}");  // last variable fastest

  CHECK_THROWS_AS(StateSpace({{"x", 100000}}), StateCapExceededError);
  CHECK_THROWS_AS(StateSpace({{"x", 1}, {"x", 1}}), InvariantError);
}
