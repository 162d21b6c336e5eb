#include "doctest.h"

#include <random>

#include "decidua/coproducts.hpp"
#include "decidua/errors.hpp"
#include "decidua/generators.hpp"
#include "decidua/json_io.hpp"

using namespace decidua;

TEST_CASE("objects roundtrip through JSON") {
  std::vector<FinObj> objects = {
      FinObj::empty(),
      FinObj::unit(),
      FinObj::atom({"a", "b", "c"}),
      sum_obj(FinObj::atom({"a"}), FinObj::unit()),
      sum_obj(sum_obj(FinObj::atom({"a"}), FinObj::empty()),
              FinObj::atom({"b", "c"})),
  };
  for (const FinObj& x : objects) {
    CHECK(obj_from_json(obj_to_json(x)) == x);
  }
}

TEST_CASE("maps roundtrip through JSON") {
  std::mt19937_64 rng(99);
  for (int t = 0; t < 60; ++t) {
    FinObj x = random_atom(rng, 4);
    FinObj y = sum_obj(random_atom(rng, 3), random_atom(rng, 3));
    PMap f = random_pmap(rng() % 2 == 0 ? x : y, rng() % 2 == 0 ? y : x, rng);
    CHECK(pmap_from_json(pmap_to_json(f)) == f);
  }
}

TEST_CASE("unknown keys are rejected") {
  nlohmann::json obj = {{"form", "atom"}, {"elems", {"a"}}, {"extra", 1}};
  CHECK_THROWS_AS(obj_from_json(obj), JsonFormatError);

  nlohmann::json map = pmap_to_json(identity(FinObj::atom({"a"})));
  map["note"] = "hi";
  CHECK_THROWS_AS(pmap_from_json(map), JsonFormatError);
}

TEST_CASE("malformed objects are rejected") {
  using nlohmann::json;
  CHECK_THROWS_AS(obj_from_json(json{{"elems", {"a"}}}), JsonFormatError);
  CHECK_THROWS_AS(obj_from_json(json{{"form", "unit"}, {"elems", {"a", "b"}}}),
                  JsonFormatError);
  CHECK_THROWS_AS(obj_from_json(json{{"form", "empty"}, {"elems", {"a"}}}),
                  JsonFormatError);
  CHECK_THROWS_AS(obj_from_json(json{{"form", "sum"}}), JsonFormatError);
  CHECK_THROWS_AS(obj_from_json(json{{"form", "who"}}), JsonFormatError);
  CHECK_THROWS_AS(
      obj_from_json(json{{"form", "atom"},
                         {"elems", {"a"}},
                         {"left", json{{"form", "unit"}, {"elems", {"u"}}}}}),
      JsonFormatError);

  // an explicit element list on a sum must match the tagging rule
  nlohmann::json sum = obj_to_json(sum_obj(FinObj::atom({"a"}), FinObj::unit()));
  sum["elems"] = {"a", "b"};
  CHECK_THROWS_AS(obj_from_json(sum), JsonFormatError);
}

TEST_CASE("malformed maps are rejected") {
  nlohmann::json good = pmap_to_json(identity(FinObj::atom({"a"})));

  nlohmann::json missing = good;
  missing.erase("map");
  CHECK_THROWS_AS(pmap_from_json(missing), JsonFormatError);

  nlohmann::json bad_value = good;
  bad_value["map"]["a"] = "nonexistent";
  CHECK_THROWS_AS(pmap_from_json(bad_value), JsonFormatError);

  CHECK_THROWS_AS(pmap_from_json_text("not json at all"), JsonFormatError);
}
