#pragma once

#include <iosfwd>

#include "decidua/fin_obj.hpp"
#include "decidua/pmap.hpp"

namespace decidua {

/// A branch-tagging map on a carrier X: a partial map X -> X+X whose defined
/// values only record which summand the input is sent to, i.e. every value is
/// L·x or R·x for the key x itself. Construction validates this, so holding a
/// Decision is proof of the tagging discipline.
class Decision {
 public:
  explicit Decision(PMap underlying);

  const PMap& underlying() const { return underlying_; }
  const FinObj& carrier() const { return underlying_.dom(); }

  friend bool operator==(const Decision& a, const Decision& b) {
    return a.underlying_ == b.underlying_;
  }
  friend bool operator!=(const Decision& a, const Decision& b) {
    return !(a == b);
  }

 private:
  PMap underlying_;
};

// True iff p has the shape and tagging discipline of a decision.
bool is_decision(const PMap& p);

// The decision of f : X -> Y+Z. Sends x to L·x when f(x) lands in the left
// block, to R·x when it lands in the right block, and is undefined where f
// is. Throws ShapeError unless the codomain of f is a binary sum.
Decision decide(const PMap& f);

// Checks the two decision laws of a candidate p : X -> X+X against
// f : X -> Y+Z, without assuming p was built by decide:
//   (D1)  codiagonal ∘ p = restriction(f)
//   (D2)  (f+f) ∘ p = (inj1+inj2) ∘ f
// Throws ShapeError when the shapes do not match up.
bool check_decision_laws(const PMap& candidate, const PMap& f);
bool check_decision_laws(const Decision& d, const PMap& f);

// Decisions are partial isomorphisms; this returns the inverse X+X -> X.
PMap decision_inverse(const Decision& d);

// Contravariant action of f : Y -> X on decisions over X: precompose and
// re-decide. transform(identity, d) = d and
// transform(g∘f, d) = transform(f, transform(g, d)).
Decision transform(const PMap& f, const Decision& d);

std::ostream& operator<<(std::ostream& os, const Decision& d);

}  // namespace decidua
