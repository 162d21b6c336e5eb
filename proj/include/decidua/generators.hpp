#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "decidua/decision.hpp"
#include "decidua/fin_obj.hpp"
#include "decidua/kleene.hpp"
#include "decidua/pmap.hpp"

namespace decidua {

// Exhaustive enumeration is only offered for objects of at most this many
// elements; larger requests raise CapExceededError.
inline constexpr std::size_t kEnumerateCap = 4;

// All (|Y|+1)^|X| partial maps X -> Y, each exactly once, in a deterministic
// order: the assignment of the last element varies fastest, with "undefined"
// ordered before the codomain elements.
std::vector<PMap> enumerate_pmaps(const FinObj& x, const FinObj& y);

// All 2^|X| restriction idempotents on X (partial identities on subsets).
std::vector<PMap> restriction_idempotents(const FinObj& x);

// All 3^|X| decisions on X, one per valuation of the carrier.
std::vector<Decision> all_decisions(const FinObj& x);

// All 2^|X| total decisions on X.
std::vector<Decision> total_decisions(const FinObj& x);

// A random partial map: each element is undefined with probability 1/3 and
// otherwise sent to a uniformly chosen codomain element. The draw sequence
// depends only on the generator state, so a fixed seed reproduces the map.
PMap random_pmap(const FinObj& x, const FinObj& y, std::mt19937_64& rng);
PMap random_pmap(const FinObj& x, const FinObj& y, std::uint64_t seed);

Decision random_decision(const FinObj& x, std::mt19937_64& rng);

// The atom object with elements "a", "b", ... of the given size (size 0 gives
// the empty object). Supports sizes up to 26.
FinObj canonical_atom(int size);
std::vector<FinObj> canonical_atoms(int max_size);
FinObj random_atom(std::mt19937_64& rng, int max_size);

}  // namespace decidua
