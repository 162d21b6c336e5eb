#include "doctest.h"

#include "decidua/coproducts.hpp"
#include "decidua/decision.hpp"
#include "decidua/errors.hpp"
#include "decidua/generators.hpp"
#include "decidua/kleene.hpp"

using namespace decidua;

namespace {

// f : {x1,x2,x3} -> Y+Z with f(x1) in the left block, f(x2) in the right,
// x3 undefined.
PMap branch_example() {
  FinObj x = FinObj::atom({"x1", "x2", "x3"});
  FinObj yz = sum_obj(FinObj::atom({"y1"}), FinObj::atom({"z1"}));
  return PMap(x, yz,
              {{"x1", tag_left("y1")}, {"x2", tag_right("z1")}});
}

}  // namespace

TEST_CASE("decide tags inputs by the branch the map takes") {
  PMap f = branch_example();
  Decision d = decide(f);
  const FinObj& x = f.dom();
  CHECK(d.underlying() ==
        PMap(x, sum_obj(x, x),
             {{"x1", tag_left("x1")}, {"x2", tag_right("x2")}}));

  FinObj a = FinObj::atom({"a", "b"});
  CHECK(decide(inj1(a, a)).underlying() == inj1(a, a));
  CHECK(decide(zero_map(a, sum_obj(a, a))).underlying() ==
        zero_map(a, sum_obj(a, a)));
  CHECK_THROWS_AS(decide(identity(a)), ShapeError);
}

TEST_CASE("the decision laws hold for decide and pin it down uniquely") {
  PMap f = branch_example();
  CHECK(check_decision_laws(decide(f), f));

  // a wrong candidate: always-left against the right injection
  FinObj a = FinObj::atom({"a"});
  CHECK_FALSE(check_decision_laws(inj1(a, a), inj2(a, a)));

  // brute force: among all maps X -> X+X exactly one satisfies both laws
  for (int nx = 0; nx <= 2; ++nx) {
    FinObj x = canonical_atom(nx);
    FinObj yz = sum_obj(canonical_atom(1), canonical_atom(2));
    for (const PMap& g : enumerate_pmaps(x, yz)) {
      long hits = 0;
      for (const PMap& p : enumerate_pmaps(x, sum_obj(x, x))) {
        if (check_decision_laws(p, g)) {
          ++hits;
          CHECK(p == decide(g).underlying());
        }
      }
      CHECK(hits == 1);
    }
  }
}

TEST_CASE("check_decision_laws rejects shape mismatches") {
  PMap f = branch_example();
  FinObj other = FinObj::atom({"q"});
  CHECK_THROWS_AS(check_decision_laws(identity(other), f), ShapeError);
  CHECK_THROWS_AS(check_decision_laws(decide(f).underlying(), identity(other)),
                  ShapeError);
}

TEST_CASE("decisions are partial isomorphisms with a known inverse") {
  FinObj a = FinObj::atom({"a", "b"});
  CHECK(decision_inverse(Decision(inj1(a, a))) == proj1_dagger(a, a));

  FinObj x = branch_example().dom();
  PMap z = zero_map(x, sum_obj(FinObj::atom({"y1"}), FinObj::atom({"z1"})));
  CHECK(decision_inverse(decide(z)) == zero_map(sum_obj(x, x), x));

  PMap f = branch_example();
  const FinObj& yo = f.cod().left();
  const FinObj& zo = f.cod().right();
  PMap r1 = restriction(compose(proj1_dagger(yo, zo), f));
  PMap r2 = restriction(compose(proj2_dagger(yo, zo), f));
  CHECK(restriction(decision_inverse(decide(f))) == sum_map(r1, r2));
}

TEST_CASE("transform precomposes and re-decides") {
  FinObj x = FinObj::atom({"x1", "x2"});
  Decision d = decision_from_valuation(
      x, {{"x1", Kleene3::True}, {"x2", Kleene3::False}});

  FinObj y = FinObj::atom({"y1"});
  PMap f(y, x, {{"y1", "x2"}});
  Decision moved = transform(f, d);
  CHECK(read_pointwise(moved, "y1") == Kleene3::False);

  CHECK(transform(identity(x), d) == d);
  CHECK(transform(zero_map(y, x), d).underlying() ==
        zero_map(y, sum_obj(y, y)));
}

TEST_CASE("decision construction rejects maps that move elements") {
  FinObj x = FinObj::atom({"a", "b"});
  FinObj xx = sum_obj(x, x);
  // sends a to the tag of b
  CHECK_THROWS_AS(Decision(PMap(x, xx, {{"a", tag_left("b")}})), ShapeError);
  CHECK_THROWS_AS(Decision(identity(x)), ShapeError);
  CHECK_NOTHROW(Decision(PMap(x, xx, {{"a", tag_left("a")}})));
}

TEST_CASE("tag-only discipline matches the componentwise characterization") {
  // p is a decision iff both composites with the dagger projections are
  // restriction idempotents
  FinObj x = FinObj::atom({"a", "b"});
  FinObj xx = sum_obj(x, x);
  for (const PMap& p : enumerate_pmaps(x, xx)) {
    bool componentwise =
        is_restriction_idempotent(compose(proj1_dagger(x, x), p)) &&
        is_restriction_idempotent(compose(proj2_dagger(x, x), p));
    CHECK(is_decision(p) == componentwise);
  }
}
