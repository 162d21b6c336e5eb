#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>

#include "decidua/fin_obj.hpp"

namespace decidua {

/// A partial map between finite objects: a finite graph taking a subset of
/// the domain's elements to elements of the codomain. Values are immutable
/// after construction and equality is strict: equal domain, equal codomain,
/// identical graph.
class PMap {
 public:
  PMap(FinObj dom, FinObj cod, std::map<std::string, std::string> graph);

  const FinObj& dom() const { return dom_; }
  const FinObj& cod() const { return cod_; }
  const std::map<std::string, std::string>& graph() const { return graph_; }

  bool defined_at(const std::string& x) const { return graph_.count(x) != 0; }
  std::optional<std::string> value_at(const std::string& x) const;

  friend bool operator==(const PMap& a, const PMap& b) {
    return a.dom_ == b.dom_ && a.cod_ == b.cod_ && a.graph_ == b.graph_;
  }
  friend bool operator!=(const PMap& a, const PMap& b) { return !(a == b); }

 private:
  FinObj dom_;
  FinObj cod_;
  std::map<std::string, std::string> graph_;
};

// The total map x |-> x.
PMap identity(const FinObj& x);

// g after f. Defined at x exactly when f is defined at x and g is defined at
// f(x). Throws ObjectMismatchError unless f.cod equals g.dom.
PMap compose(const PMap& g, const PMap& f);

// The partial identity on dom(f) defined exactly where f is.
PMap restriction(const PMap& f);

// True iff restriction(f) is the identity on f's domain.
bool is_total(const PMap& f);

// The information order on a hom-set: f <= g iff g restricted to where f is
// defined equals f. Throws ObjectMismatchError unless f and g share domain
// and codomain.
bool natural_leq(const PMap& f, const PMap& g);

// The unique partial inverse when f is injective on its domain of definition,
// otherwise nullopt. The result satisfies inv∘f = restriction(f) and
// f∘inv = restriction(inv).
std::optional<PMap> partial_inverse(const PMap& f);

// True iff e is its own restriction, i.e. e(x) = x wherever defined. Throws
// ObjectMismatchError unless dom(e) equals cod(e).
bool is_restriction_idempotent(const PMap& e);

std::ostream& operator<<(std::ostream& os, const PMap& f);

}  // namespace decidua
