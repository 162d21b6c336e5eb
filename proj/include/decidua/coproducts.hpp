#pragma once

#include "decidua/fin_obj.hpp"
#include "decidua/pmap.hpp"

namespace decidua {

// Structural morphisms of the coproduct: injections, copairing, sums of maps,
// the codiagonal, the twist, the associators, and the maps induced by the
// terminal and zero objects. Injections are total; the zero map is least in
// its hom-set; each injection has copair(identity, zero) as partial inverse.

FinObj sum_obj(const FinObj& x, const FinObj& y);

PMap inj1(const FinObj& x, const FinObj& y);  // x |-> L·x into X+Y
PMap inj2(const FinObj& x, const FinObj& y);  // y |-> R·y into X+Y

// [f, g] : dom(f)+dom(g) -> Z for f, g into a common codomain Z.
PMap copair(const PMap& f, const PMap& g);

// f+g : acts as f on the left block and g on the right block, keeping tags.
PMap sum_map(const PMap& f, const PMap& g);

PMap codiagonal(const FinObj& x);              // [id, id] : X+X -> X
PMap twist(const FinObj& x, const FinObj& y);  // [inj2, inj1] : X+Y -> Y+X

// (X+Y)+Z -> X+(Y+Z), sending L·L·x to L·x, L·R·y to R·L·y, R·z to R·R·z.
PMap assoc_right(const FinObj& x, const FinObj& y, const FinObj& z);
// Its inverse X+(Y+Z) -> (X+Y)+Z.
PMap assoc_left(const FinObj& x, const FinObj& y, const FinObj& z);

PMap bang(const FinObj& x);  // the total map X -> 1
PMap zero_map(const FinObj& x, const FinObj& y);

PMap proj1_dagger(const FinObj& x, const FinObj& y);  // [id, 0] : X+Y -> X
PMap proj2_dagger(const FinObj& x, const FinObj& y);  // [0, id] : X+Y -> Y

}  // namespace decidua
