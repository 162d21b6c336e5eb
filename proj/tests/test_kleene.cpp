#include "doctest.h"

#include "decidua/coproducts.hpp"
#include "decidua/errors.hpp"
#include "decidua/generators.hpp"
#include "decidua/kleene.hpp"
#include "decidua/logic.hpp"

using namespace decidua;

namespace {
const Kleene3 T = Kleene3::True;
const Kleene3 F = Kleene3::False;
const Kleene3 U = Kleene3::Undef;
}  // namespace

TEST_CASE("the weak tables, cell by cell") {
  // negation
  CHECK(weak_not(T) == F);
  CHECK(weak_not(F) == T);
  CHECK(weak_not(U) == U);

  // conjunction rows (t, f, u) x columns (t, f, u)
  Kleene3 and_expected[3][3] = {{T, F, U}, {F, F, U}, {U, U, U}};
  Kleene3 or_expected[3][3] = {{T, T, U}, {T, F, U}, {U, U, U}};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      CHECK(weak_and(kKleeneValues[i], kKleeneValues[j]) == and_expected[i][j]);
      CHECK(weak_or(kKleeneValues[i], kKleeneValues[j]) == or_expected[i][j]);
    }
  }

  // on definite values this is classical logic
  for (Kleene3 a : {T, F}) {
    for (Kleene3 b : {T, F}) {
      CHECK(weak_and(a, b) == ((a == T && b == T) ? T : F));
      CHECK(weak_or(a, b) == ((a == T || b == T) ? T : F));
    }
  }
}

TEST_CASE("formula evaluation is table-driven and contagious") {
  Formula phi = Formula::conjunction(
      Formula::var("x"),
      Formula::disjunction(Formula::var("y"), Formula::var("z")));
  CHECK(eval_formula(phi, {{"x", T}, {"y", F}, {"z", U}}) == U);
  CHECK(eval_formula(phi, {{"x", T}, {"y", F}, {"z", T}}) == T);

  CHECK(eval_formula(Formula::const_true(), {}) == T);
  CHECK(eval_formula(Formula::const_false(), {}) == F);
  CHECK(eval_formula(Formula::negation(Formula::negation(Formula::var("x"))),
                     {{"x", F}}) == F);
  CHECK_THROWS_AS(eval_formula(Formula::var("missing"), {}),
                  UnboundVariableError);
}

TEST_CASE("pointwise readings of decisions") {
  FinObj x = FinObj::atom({"x1", "x2", "x3"});
  CHECK(read_pointwise(top(x), "x1") == T);
  CHECK(read_pointwise(decide(zero_map(x, sum_obj(x, x))), "x2") == U);

  FinObj xs = FinObj::atom({"x1", "x2", "x3"});
  FinObj yz = sum_obj(FinObj::atom({"y1"}), FinObj::atom({"z1"}));
  PMap f(xs, yz, {{"x1", tag_left("y1")}, {"x2", tag_right("z1")}});
  CHECK(read_pointwise(decide(f), "x2") == F);

  CHECK_THROWS_AS(read_pointwise(top(x), "nope"), ElementNotInCarrierError);
}

TEST_CASE("valuations and decisions are in bijection") {
  FinObj x = FinObj::atom({"x1", "x2"});
  CHECK(decision_from_valuation(x, {{"x1", T}, {"x2", T}}) == top(x));

  auto all = all_decisions(x);
  CHECK(all.size() == 9);
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (std::size_t j = i + 1; j < all.size(); ++j) {
      CHECK(all[i] != all[j]);
    }
  }

  // roundtrip: read back the valuation and rebuild the decision
  for (const Decision& d : all) {
    std::map<std::string, Kleene3> v;
    for (const auto& e : x.elems()) v[e] = read_pointwise(d, e);
    CHECK(decision_from_valuation(x, v) == d);
  }

  CHECK_THROWS_AS(decision_from_valuation(x, {{"x1", T}}), InvariantError);
  CHECK_THROWS_AS(
      decision_from_valuation(x, {{"x1", T}, {"x2", T}, {"zz", T}}),
      ElementNotInCarrierError);
}

TEST_CASE("connectives on decisions act independently per element") {
  FinObj x = FinObj::atom({"x1", "x2"});
  auto all = all_decisions(x);
  long pairs = 0;
  for (const Decision& p : all) {
    for (const Decision& q : all) {
      Decision cpq = conj(p, q);
      Decision dpq = disj(p, q);
      for (const auto& e : x.elems()) {
        Kleene3 a = read_pointwise(p, e), b = read_pointwise(q, e);
        CHECK(read_pointwise(cpq, e) == weak_and(a, b));
        CHECK(read_pointwise(dpq, e) == weak_or(a, b));
      }
      ++pairs;
    }
    for (const auto& e : x.elems()) {
      CHECK(read_pointwise(neg(p), e) == weak_not(read_pointwise(p, e)));
    }
  }
  CHECK(pairs == 81);
}
