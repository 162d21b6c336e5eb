#pragma once

#include "decidua/decision.hpp"
#include "decidua/fin_obj.hpp"
#include "decidua/pmap.hpp"

namespace decidua {

// The logic of decisions on a carrier X. Constants are the injections,
// negation is the twist, and the binary connectives are built from sums,
// associators and partial inverses so that every connective is itself a
// partial isomorphism:
//
//   p ∧ q = (id + p†) ∘ assoc_right ∘ (q + restriction(q)) ∘ p
//   p ∨ q = (p† + id) ∘ assoc_left  ∘ (restriction(q) + q) ∘ p
//
// Undefinedness is contagious through all of them. Predicates are partial
// maps into the canonical two-element object 1+1, with the left component
// standing for truth.

Decision top(const FinObj& x);
Decision bot(const FinObj& x);

Decision neg(const Decision& p);
Decision conj(const Decision& p, const Decision& q);
Decision disj(const Decision& p, const Decision& q);

// p entails q iff conj(p, q) = p.
bool entails(const Decision& p, const Decision& q);

// The two derived orders. conj_leq coincides with entailment; disj_leq holds
// iff disj(p, q) = q. They do not coincide in general, only up to the
// anti-isomorphism given by negation.
bool conj_leq(const Decision& p, const Decision& q);
bool disj_leq(const Decision& p, const Decision& q);

// The canonical predicate codomain 1+1 with elements L·• and R·•.
FinObj one_plus_one();

// Collapse a decision to a predicate X -> 1+1 by forgetting everything but
// the branch: (bang + bang) ∘ d.
PMap dec_to_pred(const Decision& d);

// The decision of a predicate. Throws ShapeError unless the codomain is the
// canonical 1+1. Mutually inverse with dec_to_pred.
Decision pred_to_dec(const PMap& p);

// Computes the decision of f by the predicate route, decide((bang+bang) ∘ f),
// and checks it against decide(f) before returning it.
Decision decision_of_any(const PMap& f);

}  // namespace decidua
