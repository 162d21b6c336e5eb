#include "decidua/coproducts.hpp"

#include <map>

#include "decidua/errors.hpp"

namespace decidua {

FinObj sum_obj(const FinObj& x, const FinObj& y) { return FinObj::sum(x, y); }

PMap inj1(const FinObj& x, const FinObj& y) {
  std::map<std::string, std::string> graph;
  for (const auto& e : x.elems()) graph.emplace(e, tag_left(e));
  return PMap(x, sum_obj(x, y), std::move(graph));
}

PMap inj2(const FinObj& x, const FinObj& y) {
  std::map<std::string, std::string> graph;
  for (const auto& e : y.elems()) graph.emplace(e, tag_right(e));
  return PMap(y, sum_obj(x, y), std::move(graph));
}

PMap copair(const PMap& f, const PMap& g) {
  if (f.cod() != g.cod()) {
    throw ObjectMismatchError("copair: codomains " + f.cod().describe() +
                              " and " + g.cod().describe() + " differ");
  }
  std::map<std::string, std::string> graph;
  for (const auto& [x, y] : f.graph()) graph.emplace(tag_left(x), y);
  for (const auto& [x, y] : g.graph()) graph.emplace(tag_right(x), y);
  return PMap(sum_obj(f.dom(), g.dom()), f.cod(), std::move(graph));
}

PMap sum_map(const PMap& f, const PMap& g) {
  return copair(compose(inj1(f.cod(), g.cod()), f),
                compose(inj2(f.cod(), g.cod()), g));
}

PMap codiagonal(const FinObj& x) { return copair(identity(x), identity(x)); }

PMap twist(const FinObj& x, const FinObj& y) {
  return copair(inj2(y, x), inj1(y, x));
}

PMap assoc_right(const FinObj& x, const FinObj& y, const FinObj& z) {
  FinObj yz = sum_obj(y, z);
  return copair(copair(inj1(x, yz), compose(inj2(x, yz), inj1(y, z))),
                compose(inj2(x, yz), inj2(y, z)));
}

PMap assoc_left(const FinObj& x, const FinObj& y, const FinObj& z) {
  FinObj xy = sum_obj(x, y);
  return copair(compose(inj1(xy, z), inj1(x, y)),
                copair(compose(inj1(xy, z), inj2(x, y)), inj2(xy, z)));
}

PMap bang(const FinObj& x) {
  FinObj one = FinObj::unit();
  std::map<std::string, std::string> graph;
  for (const auto& e : x.elems()) graph.emplace(e, kUnitElement);
  return PMap(x, one, std::move(graph));
}

PMap zero_map(const FinObj& x, const FinObj& y) { return PMap(x, y, {}); }

PMap proj1_dagger(const FinObj& x, const FinObj& y) {
  return copair(identity(x), zero_map(y, x));
}

PMap proj2_dagger(const FinObj& x, const FinObj& y) {
  return copair(zero_map(x, y), identity(y));
}

}  // namespace decidua
