#include "decidua/pmap.hpp"

#include <ostream>
#include <utility>

#include "decidua/errors.hpp"

namespace decidua {

PMap::PMap(FinObj dom, FinObj cod, std::map<std::string, std::string> graph)
    : dom_(std::move(dom)), cod_(std::move(cod)), graph_(std::move(graph)) {
  for (const auto& [x, y] : graph_) {
    if (!dom_.contains(x)) {
      throw InvariantError("graph key '" + x + "' is not in the domain " +
                           dom_.describe());
    }
    if (!cod_.contains(y)) {
      throw InvariantError("graph value '" + y + "' is not in the codomain " +
                           cod_.describe());
    }
  }
}

std::optional<std::string> PMap::value_at(const std::string& x) const {
  auto it = graph_.find(x);
  if (it == graph_.end()) return std::nullopt;
  return it->second;
}

PMap identity(const FinObj& x) {
  std::map<std::string, std::string> graph;
  for (const auto& e : x.elems()) graph.emplace(e, e);
  return PMap(x, x, std::move(graph));
}

PMap compose(const PMap& g, const PMap& f) {
  if (f.cod() != g.dom()) {
    throw ObjectMismatchError("compose: codomain " + f.cod().describe() +
                              " does not match domain " + g.dom().describe());
  }
  std::map<std::string, std::string> graph;
  for (const auto& [x, y] : f.graph()) {
    if (auto z = g.value_at(y)) graph.emplace(x, *z);
  }
  return PMap(f.dom(), g.cod(), std::move(graph));
}

PMap restriction(const PMap& f) {
  std::map<std::string, std::string> graph;
  for (const auto& [x, y] : f.graph()) graph.emplace(x, x);
  return PMap(f.dom(), f.dom(), std::move(graph));
}

bool is_total(const PMap& f) { return restriction(f) == identity(f.dom()); }

bool natural_leq(const PMap& f, const PMap& g) {
  if (f.dom() != g.dom() || f.cod() != g.cod()) {
    throw ObjectMismatchError("natural_leq: maps live in different hom-sets");
  }
  return compose(g, restriction(f)) == f;
}

std::optional<PMap> partial_inverse(const PMap& f) {
  std::map<std::string, std::string> inverted;
  for (const auto& [x, y] : f.graph()) {
    if (!inverted.emplace(y, x).second) return std::nullopt;
  }
  PMap inv(f.cod(), f.dom(), std::move(inverted));
  if (compose(inv, f) != restriction(f) || compose(f, inv) != restriction(inv)) {
    throw InvariantError("partial_inverse: inverse equations failed");
  }
  return inv;
}

bool is_restriction_idempotent(const PMap& e) {
  if (e.dom() != e.cod()) {
    throw ObjectMismatchError(
        "is_restriction_idempotent: domain and codomain differ");
  }
  return e == restriction(e);
}

std::ostream& operator<<(std::ostream& os, const PMap& f) {
  os << f.dom().describe() << " -> " << f.cod().describe() << " {";
  bool first = true;
  for (const auto& [x, y] : f.graph()) {
    if (!first) os << ", ";
    first = false;
    os << x << " |-> " << y;
  }
  return os << "}";
}

}  // namespace decidua
