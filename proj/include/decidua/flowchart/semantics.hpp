#pragma once

#include <optional>

#include "decidua/flowchart/ast.hpp"
#include "decidua/kleene.hpp"
#include "decidua/pmap.hpp"

namespace decidua::flowchart {

// Arithmetic is over the nonnegative integers and partial: a subtraction
// dipping below zero (or an overflowing intermediate) has no value, and an
// expression without a value poisons whatever contains it.
std::optional<long> eval_aexp(const AExp& e, const State& s);

// Single-state predicate evaluation with the weak three-valued tables; a
// comparison whose operand has no value is Undef, and Undef spreads through
// not/and/or.
Kleene3 eval_pred(const Pred& p, const State& s);

// Big-step execution from one state. Returns the final state, or nullopt for
// a run that gets stuck (guard Undef, assignment out of range) or loops
// forever. Divergence is detected exactly: execution is deterministic over a
// finite state space, so a loop revisiting a state at its own head can never
// terminate.
std::optional<State> run_operational(const StmtPtr& program,
                                     const StateSpace& space, State s);

// The predicate as a partial map into 1+1, with the left component meaning
// true. Compound predicates are interpreted through the decision connectives,
// not re-evaluated per state.
PMap denote_pred(const PredPtr& p, const StateSpace& space);

// The program as a partial map from states to states. Conditionals branch by
// copairing over the guard's decision; loops are least fixed points computed
// by iterating from the nowhere-defined map, which stabilizes after at most
// |states|+1 rounds.
PMap denote(const StmtPtr& program, const StateSpace& space);

}  // namespace decidua::flowchart
