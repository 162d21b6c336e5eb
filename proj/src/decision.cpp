#include "decidua/decision.hpp"

#include <ostream>
#include <utility>

#include "decidua/coproducts.hpp"
#include "decidua/errors.hpp"

namespace decidua {

namespace {

bool decision_shape_ok(const PMap& p) {
  return p.cod().form() == FinObj::Form::Sum && p.cod().left() == p.dom() &&
         p.cod().right() == p.dom();
}

bool tags_ok(const PMap& p) {
  for (const auto& [x, v] : p.graph()) {
    if (v != tag_left(x) && v != tag_right(x)) return false;
  }
  return true;
}

}  // namespace

bool is_decision(const PMap& p) { return decision_shape_ok(p) && tags_ok(p); }

Decision::Decision(PMap underlying) : underlying_(std::move(underlying)) {
  if (!decision_shape_ok(underlying_)) {
    throw ShapeError("decision: codomain must be carrier+carrier, got " +
                     underlying_.cod().describe() + " over " +
                     underlying_.dom().describe());
  }
  if (!tags_ok(underlying_)) {
    throw ShapeError("decision: map moves elements instead of tagging them");
  }
}

Decision decide(const PMap& f) {
  if (f.cod().form() != FinObj::Form::Sum) {
    throw ShapeError("decide: codomain " + f.cod().describe() +
                     " is not a binary sum");
  }
  const FinObj& x = f.dom();
  std::map<std::string, std::string> graph;
  for (const auto& [k, v] : f.graph()) {
    graph.emplace(k, has_left_tag(v) ? tag_left(k) : tag_right(k));
  }
  return Decision(PMap(x, sum_obj(x, x), std::move(graph)));
}

bool check_decision_laws(const PMap& candidate, const PMap& f) {
  if (f.cod().form() != FinObj::Form::Sum) {
    throw ShapeError("check_decision_laws: codomain of f is not a binary sum");
  }
  const FinObj& x = f.dom();
  if (candidate.dom() != x || candidate.cod() != sum_obj(x, x)) {
    throw ShapeError("check_decision_laws: candidate is not a map X -> X+X "
                     "over the domain of f");
  }
  const FinObj& yo = f.cod().left();
  const FinObj& zo = f.cod().right();
  bool d1 = compose(codiagonal(x), candidate) == restriction(f);
  bool d2 = compose(sum_map(f, f), candidate) ==
            compose(sum_map(inj1(yo, zo), inj2(yo, zo)), f);
  return d1 && d2;
}

bool check_decision_laws(const Decision& d, const PMap& f) {
  return check_decision_laws(d.underlying(), f);
}

PMap decision_inverse(const Decision& d) {
  auto inv = partial_inverse(d.underlying());
  if (!inv) {
    throw InvariantError("decision_inverse: tagging map was not injective");
  }
  return *inv;
}

Decision transform(const PMap& f, const Decision& d) {
  return decide(compose(d.underlying(), f));
}

std::ostream& operator<<(std::ostream& os, const Decision& d) {
  return os << d.underlying();
}

}  // namespace decidua
