#include "doctest.h"

#include "decidua/coproducts.hpp"
#include "decidua/errors.hpp"
#include "decidua/generators.hpp"
#include "decidua/pmap.hpp"

using namespace decidua;

namespace {

PMap pm(const FinObj& dom, const FinObj& cod,
        std::map<std::string, std::string> graph) {
  return PMap(dom, cod, std::move(graph));
}

}  // namespace

TEST_CASE("identity is the total x |-> x map") {
  FinObj ab = FinObj::atom({"a", "b"});
  PMap id = identity(ab);
  CHECK(id.graph() == std::map<std::string, std::string>{{"a", "a"}, {"b", "b"}});
  CHECK(identity(FinObj::empty()).graph().empty());

  // unit law: composing with the identity changes nothing
  FinObj c = FinObj::atom({"c"});
  for (const PMap& f : enumerate_pmaps(c, ab)) {
    CHECK(compose(identity(ab), f) == f);
    CHECK(compose(f, identity(c)) == f);
  }
}

TEST_CASE("composition follows defined-at chains") {
  FinObj ab = FinObj::atom({"a", "b"});
  FinObj c = FinObj::atom({"c"});
  FinObj d = FinObj::atom({"d"});
  PMap f = pm(ab, c, {{"a", "c"}});
  PMap g = pm(c, d, {{"c", "d"}});
  PMap gf = compose(g, f);
  CHECK(gf.value_at("a") == "d");
  CHECK_FALSE(gf.defined_at("b"));

  CHECK(compose(zero_map(c, d), f) == zero_map(ab, d));
  CHECK(compose(g, identity(c)) == g);
  CHECK_THROWS_AS(compose(f, g), ObjectMismatchError);
}

TEST_CASE("composition agrees with the elementwise oracle") {
  // independently recompute g(f(x)) one element at a time
  for (int nx = 0; nx <= 2; ++nx) {
    for (int ny = 0; ny <= 2; ++ny) {
      FinObj x = canonical_atom(nx), y = canonical_atom(ny);
      FinObj z = FinObj::atom({"z1", "z2"});
      for (const PMap& f : enumerate_pmaps(x, y)) {
        for (const PMap& g : enumerate_pmaps(y, z)) {
          PMap gf = compose(g, f);
          for (const std::string& e : x.elems()) {
            std::optional<std::string> expect;
            if (auto mid = f.value_at(e)) expect = g.value_at(*mid);
            CHECK(gf.value_at(e) == expect);
          }
        }
      }
    }
  }
}

TEST_CASE("restriction is the partial identity where f is defined") {
  FinObj ab = FinObj::atom({"a", "b"});
  FinObj c = FinObj::atom({"c"});
  PMap f = pm(ab, c, {{"a", "c"}});
  PMap rf = restriction(f);
  CHECK(rf.dom() == ab);
  CHECK(rf.cod() == ab);
  CHECK(rf.value_at("a") == "a");
  CHECK_FALSE(rf.defined_at("b"));

  CHECK(restriction(identity(ab)) == identity(ab));
  CHECK(restriction(zero_map(ab, c)) == zero_map(ab, ab));
}

TEST_CASE("totality") {
  FinObj ab = FinObj::atom({"a", "b"});
  FinObj c = FinObj::atom({"c"});
  CHECK(is_total(identity(ab)));
  CHECK_FALSE(is_total(pm(ab, c, {{"a", "c"}})));
  // the unique map into the unit object is total for every object
  CHECK(is_total(bang(ab)));
  CHECK(is_total(bang(FinObj::empty())));
  CHECK(is_total(bang(FinObj::unit())));
}

TEST_CASE("the natural order on a hom-set") {
  FinObj ab = FinObj::atom({"a", "b"});
  FinObj c = FinObj::atom({"c"});
  PMap big = pm(ab, c, {{"a", "c"}, {"b", "c"}});
  PMap small = pm(ab, c, {{"a", "c"}});

  for (const PMap& f : enumerate_pmaps(ab, c)) {
    CHECK(natural_leq(zero_map(ab, c), f));  // zero is least
    CHECK(natural_leq(f, f));                // reflexive
  }
  CHECK(natural_leq(small, big));
  CHECK_FALSE(natural_leq(big, small));
  CHECK_THROWS_AS(natural_leq(big, identity(ab)), ObjectMismatchError);
}

TEST_CASE("partial inverses exist exactly for partial injections") {
  FinObj ab = FinObj::atom({"a", "b"});
  FinObj c = FinObj::atom({"c"});

  CHECK(partial_inverse(identity(ab)) == identity(ab));

  auto inv = partial_inverse(pm(ab, c, {{"a", "c"}}));
  REQUIRE(inv.has_value());
  CHECK(*inv == pm(c, ab, {{"c", "a"}}));

  CHECK_FALSE(partial_inverse(pm(ab, c, {{"a", "c"}, {"b", "c"}})).has_value());

  // the defining equations hold whenever an inverse comes back
  for (const PMap& f : enumerate_pmaps(ab, FinObj::atom({"u", "v", "w"}))) {
    if (auto g = partial_inverse(f)) {
      CHECK(compose(*g, f) == restriction(f));
      CHECK(compose(f, *g) == restriction(*g));
      CHECK(partial_inverse(*g) == f);
    }
  }
}

TEST_CASE("restriction idempotents") {
  FinObj ab = FinObj::atom({"a", "b"});
  FinObj c = FinObj::atom({"c"});
  for (const PMap& f : enumerate_pmaps(ab, c)) {
    CHECK(is_restriction_idempotent(restriction(f)));
  }
  CHECK(is_restriction_idempotent(identity(ab)));
  CHECK_FALSE(is_restriction_idempotent(pm(ab, ab, {{"a", "b"}, {"b", "a"}})));
  CHECK_THROWS_AS(is_restriction_idempotent(pm(ab, c, {})),
                  ObjectMismatchError);
}

TEST_CASE("degenerate objects work everywhere") {
  FinObj zero_obj = FinObj::empty();
  FinObj one = FinObj::unit();
  FinObj ab = FinObj::atom({"a", "b"});

  CHECK(is_total(identity(zero_obj)));
  CHECK(restriction(zero_map(zero_obj, ab)) == identity(zero_obj));
  CHECK(partial_inverse(zero_map(ab, one)).has_value());
  CHECK(natural_leq(zero_map(zero_obj, zero_obj), identity(zero_obj)));
  CHECK(compose(bang(one), identity(one)) == identity(one));
}

TEST_CASE("map construction validates its graph") {
  FinObj ab = FinObj::atom({"a", "b"});
  FinObj c = FinObj::atom({"c"});
  CHECK_THROWS_AS(pm(ab, c, {{"nope", "c"}}), InvariantError);
  CHECK_THROWS_AS(pm(ab, c, {{"a", "nope"}}), InvariantError);
  CHECK_THROWS_AS(FinObj::atom({"a", "a"}), InvariantError);
}
