#include "decidua/kleene.hpp"

#include <ostream>
#include <utility>

#include "decidua/coproducts.hpp"
#include "decidua/errors.hpp"

namespace decidua {

char to_char(Kleene3 v) {
  switch (v) {
    case Kleene3::True:
      return 't';
    case Kleene3::False:
      return 'f';
    case Kleene3::Undef:
      return 'u';
  }
  return '?';
}

std::ostream& operator<<(std::ostream& os, Kleene3 v) {
  return os << to_char(v);
}

Formula Formula::var(std::string name) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Var;
  node->name = std::move(name);
  return Formula(std::move(node));
}

Formula Formula::const_true() {
  auto node = std::make_shared<Node>();
  node->kind = Kind::ConstTrue;
  return Formula(std::move(node));
}

Formula Formula::const_false() {
  auto node = std::make_shared<Node>();
  node->kind = Kind::ConstFalse;
  return Formula(std::move(node));
}

Formula Formula::negation(Formula a) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Not;
  node->children.push_back(std::move(a));
  return Formula(std::move(node));
}

Formula Formula::conjunction(Formula a, Formula b) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::And;
  node->children.push_back(std::move(a));
  node->children.push_back(std::move(b));
  return Formula(std::move(node));
}

Formula Formula::disjunction(Formula a, Formula b) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Or;
  node->children.push_back(std::move(a));
  node->children.push_back(std::move(b));
  return Formula(std::move(node));
}

Kleene3 eval_formula(const Formula& formula,
                     const std::map<std::string, Kleene3>& assignment) {
  switch (formula.kind()) {
    case Formula::Kind::Var: {
      auto it = assignment.find(formula.name());
      if (it == assignment.end()) {
        throw UnboundVariableError("unbound variable '" + formula.name() + "'");
      }
      return it->second;
    }
    case Formula::Kind::ConstTrue:
      return Kleene3::True;
    case Formula::Kind::ConstFalse:
      return Kleene3::False;
    case Formula::Kind::Not:
      return weak_not(eval_formula(formula.child(0), assignment));
    case Formula::Kind::And:
      return weak_and(eval_formula(formula.child(0), assignment),
                      eval_formula(formula.child(1), assignment));
    case Formula::Kind::Or:
      return weak_or(eval_formula(formula.child(0), assignment),
                     eval_formula(formula.child(1), assignment));
  }
  throw Error("eval_formula: unreachable");
}

Kleene3 read_pointwise(const Decision& d, const std::string& x) {
  if (!d.carrier().contains(x)) {
    throw ElementNotInCarrierError("element '" + x +
                                   "' is not in the carrier " +
                                   d.carrier().describe());
  }
  auto v = d.underlying().value_at(x);
  if (!v) return Kleene3::Undef;
  return has_left_tag(*v) ? Kleene3::True : Kleene3::False;
}

Decision decision_from_valuation(const FinObj& x,
                                 const std::map<std::string, Kleene3>& v) {
  for (const auto& [elem, value] : v) {
    (void)value;
    if (!x.contains(elem)) {
      throw ElementNotInCarrierError("valuation mentions '" + elem +
                                     "' which is not in " + x.describe());
    }
  }
  std::map<std::string, std::string> graph;
  for (const auto& elem : x.elems()) {
    auto it = v.find(elem);
    if (it == v.end()) {
      throw InvariantError("valuation is missing element '" + elem + "'");
    }
    switch (it->second) {
      case Kleene3::True:
        graph.emplace(elem, tag_left(elem));
        break;
      case Kleene3::False:
        graph.emplace(elem, tag_right(elem));
        break;
      case Kleene3::Undef:
        break;
    }
  }
  return Decision(PMap(x, sum_obj(x, x), std::move(graph)));
}

}  // namespace decidua
