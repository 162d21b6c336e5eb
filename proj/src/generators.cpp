#include "decidua/generators.hpp"

#include <string>

#include "decidua/coproducts.hpp"
#include "decidua/errors.hpp"

namespace decidua {

std::vector<PMap> enumerate_pmaps(const FinObj& x, const FinObj& y) {
  if (x.size() > kEnumerateCap || y.size() > kEnumerateCap) {
    throw CapExceededError("enumerate_pmaps: objects " + x.describe() + ", " +
                           y.describe() + " exceed the enumeration cap");
  }
  const std::size_t n = x.size();
  const std::size_t choices = y.size() + 1;  // 0 means undefined
  std::vector<PMap> out;
  std::vector<std::size_t> odometer(n, 0);
  while (true) {
    std::map<std::string, std::string> graph;
    for (std::size_t i = 0; i < n; ++i) {
      if (odometer[i] > 0) {
        graph.emplace(x.elems()[i], y.elems()[odometer[i] - 1]);
      }
    }
    out.emplace_back(x, y, std::move(graph));
    std::size_t i = n;
    while (i > 0) {
      --i;
      if (++odometer[i] < choices) break;
      odometer[i] = 0;
      if (i == 0) return out;
    }
    if (n == 0) return out;
  }
}

std::vector<PMap> restriction_idempotents(const FinObj& x) {
  if (x.size() > 16) {
    throw CapExceededError("restriction_idempotents: object too large");
  }
  const std::size_t n = x.size();
  std::vector<PMap> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    std::map<std::string, std::string> graph;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (std::size_t{1} << i)) {
        graph.emplace(x.elems()[i], x.elems()[i]);
      }
    }
    out.emplace_back(x, x, std::move(graph));
  }
  return out;
}

std::vector<Decision> all_decisions(const FinObj& x) {
  if (x.size() > 8) {
    throw CapExceededError("all_decisions: carrier too large");
  }
  const std::size_t n = x.size();
  std::vector<Decision> out;
  std::vector<unsigned> odometer(n, 0);
  while (true) {
    std::map<std::string, Kleene3> valuation;
    for (std::size_t i = 0; i < n; ++i) {
      valuation.emplace(x.elems()[i], kKleeneValues[odometer[i]]);
    }
    out.push_back(decision_from_valuation(x, valuation));
    std::size_t i = n;
    while (i > 0) {
      --i;
      if (++odometer[i] < 3) break;
      odometer[i] = 0;
      if (i == 0) return out;
    }
    if (n == 0) return out;
  }
}

std::vector<Decision> total_decisions(const FinObj& x) {
  std::vector<Decision> out;
  for (const auto& d : all_decisions(x)) {
    if (is_total(d.underlying())) out.push_back(d);
  }
  return out;
}

PMap random_pmap(const FinObj& x, const FinObj& y, std::mt19937_64& rng) {
  std::map<std::string, std::string> graph;
  for (const auto& e : x.elems()) {
    if (rng() % 3 == 0 || y.size() == 0) continue;
    graph.emplace(e, y.elems()[rng() % y.size()]);
  }
  return PMap(x, y, std::move(graph));
}

PMap random_pmap(const FinObj& x, const FinObj& y, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return random_pmap(x, y, rng);
}

Decision random_decision(const FinObj& x, std::mt19937_64& rng) {
  std::map<std::string, Kleene3> valuation;
  for (const auto& e : x.elems()) {
    valuation.emplace(e, kKleeneValues[rng() % 3]);
  }
  return decision_from_valuation(x, valuation);
}

FinObj canonical_atom(int size) {
  if (size < 0 || size > 26) {
    throw CapExceededError("canonical_atom: size out of range");
  }
  std::vector<std::string> elems;
  for (int i = 0; i < size; ++i) {
    elems.push_back(std::string(1, static_cast<char>('a' + i)));
  }
  return FinObj::atom(std::move(elems));
}

std::vector<FinObj> canonical_atoms(int max_size) {
  std::vector<FinObj> out;
  for (int n = 0; n <= max_size; ++n) out.push_back(canonical_atom(n));
  return out;
}

FinObj random_atom(std::mt19937_64& rng, int max_size) {
  return canonical_atom(static_cast<int>(rng() % (max_size + 1)));
}

}  // namespace decidua
