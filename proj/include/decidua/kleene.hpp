#pragma once

#include <iosfwd>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "decidua/decision.hpp"
#include "decidua/fin_obj.hpp"

namespace decidua {

// Three-valued truth values. Undef is contagious through every weak
// connective: as soon as one input is Undef, so is the result.
enum class Kleene3 : unsigned char { True = 0, False = 1, Undef = 2 };

inline constexpr Kleene3 kKleeneValues[3] = {Kleene3::True, Kleene3::False,
                                             Kleene3::Undef};

constexpr Kleene3 weak_not(Kleene3 a) {
  constexpr Kleene3 table[3] = {Kleene3::False, Kleene3::True, Kleene3::Undef};
  return table[static_cast<unsigned>(a)];
}

constexpr Kleene3 weak_and(Kleene3 a, Kleene3 b) {
  constexpr Kleene3 t = Kleene3::True, f = Kleene3::False, u = Kleene3::Undef;
  constexpr Kleene3 table[3][3] = {
      {t, f, u},
      {f, f, u},
      {u, u, u},
  };
  return table[static_cast<unsigned>(a)][static_cast<unsigned>(b)];
}

constexpr Kleene3 weak_or(Kleene3 a, Kleene3 b) {
  constexpr Kleene3 t = Kleene3::True, f = Kleene3::False, u = Kleene3::Undef;
  constexpr Kleene3 table[3][3] = {
      {t, t, u},
      {t, f, u},
      {u, u, u},
  };
  return table[static_cast<unsigned>(a)][static_cast<unsigned>(b)];
}

char to_char(Kleene3 v);
std::ostream& operator<<(std::ostream& os, Kleene3 v);

/// Propositional formulas over named variables, evaluated with the weak
/// three-valued tables.
class Formula {
 public:
  enum class Kind { Var, ConstTrue, ConstFalse, Not, And, Or };

  static Formula var(std::string name);
  static Formula const_true();
  static Formula const_false();
  static Formula negation(Formula a);
  static Formula conjunction(Formula a, Formula b);
  static Formula disjunction(Formula a, Formula b);

  Kind kind() const { return node_->kind; }
  const std::string& name() const { return node_->name; }
  const Formula& child(std::size_t i) const { return node_->children.at(i); }

 private:
  struct Node {
    Kind kind;
    std::string name;
    std::vector<Formula> children;
  };
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

// Recursive evaluation through the weak tables. Throws UnboundVariableError
// when a variable of the formula is missing from the assignment.
Kleene3 eval_formula(const Formula& formula,
                     const std::map<std::string, Kleene3>& assignment);

// The truth value a decision assigns to a carrier element: True on the left
// tag, False on the right tag, Undef where the decision is undefined. Throws
// ElementNotInCarrierError if x is not an element of the carrier.
Kleene3 read_pointwise(const Decision& d, const std::string& x);

// Builds the decision whose pointwise reading is exactly the valuation.
// Requires a value for every carrier element; together with read_pointwise
// this is a bijection between valuations and decisions on x.
Decision decision_from_valuation(const FinObj& x,
                                 const std::map<std::string, Kleene3>& v);

}  // namespace decidua
