#include "decidua/logic.hpp"

#include "decidua/coproducts.hpp"
#include "decidua/errors.hpp"

namespace decidua {

namespace {

void require_same_carrier(const Decision& p, const Decision& q,
                          const char* op) {
  if (p.carrier() != q.carrier()) {
    throw ObjectMismatchError(std::string(op) +
                              ": decisions live on different carriers");
  }
}

}  // namespace

Decision top(const FinObj& x) { return Decision(inj1(x, x)); }

Decision bot(const FinObj& x) { return Decision(inj2(x, x)); }

Decision neg(const Decision& p) {
  const FinObj& x = p.carrier();
  return Decision(compose(twist(x, x), p.underlying()));
}

Decision conj(const Decision& p, const Decision& q) {
  require_same_carrier(p, q, "conj");
  const FinObj& x = p.carrier();
  PMap stage = compose(sum_map(q.underlying(), restriction(q.underlying())),
                       p.underlying());
  stage = compose(assoc_right(x, x, x), stage);
  stage = compose(sum_map(identity(x), decision_inverse(p)), stage);
  return Decision(std::move(stage));
}

Decision disj(const Decision& p, const Decision& q) {
  require_same_carrier(p, q, "disj");
  const FinObj& x = p.carrier();
  PMap stage = compose(sum_map(restriction(q.underlying()), q.underlying()),
                       p.underlying());
  stage = compose(assoc_left(x, x, x), stage);
  stage = compose(sum_map(decision_inverse(p), identity(x)), stage);
  return Decision(std::move(stage));
}

bool entails(const Decision& p, const Decision& q) {
  require_same_carrier(p, q, "entails");
  return conj(p, q) == p;
}

bool conj_leq(const Decision& p, const Decision& q) { return entails(p, q); }

bool disj_leq(const Decision& p, const Decision& q) {
  require_same_carrier(p, q, "disj_leq");
  return disj(p, q) == q;
}

FinObj one_plus_one() { return sum_obj(FinObj::unit(), FinObj::unit()); }

PMap dec_to_pred(const Decision& d) {
  const FinObj& x = d.carrier();
  return compose(sum_map(bang(x), bang(x)), d.underlying());
}

Decision pred_to_dec(const PMap& p) {
  if (p.cod() != one_plus_one()) {
    throw ShapeError("pred_to_dec: codomain must be the canonical 1+1, got " +
                     p.cod().describe());
  }
  return decide(p);
}

Decision decision_of_any(const PMap& f) {
  if (f.cod().form() != FinObj::Form::Sum) {
    throw ShapeError("decision_of_any: codomain is not a binary sum");
  }
  PMap collapse = sum_map(bang(f.cod().left()), bang(f.cod().right()));
  Decision via_pred = decide(compose(collapse, f));
  if (via_pred != decide(f)) {
    throw InvariantError(
        "decision_of_any: predicate route disagrees with direct decision");
  }
  return via_pred;
}

}  // namespace decidua
