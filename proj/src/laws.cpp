#include "decidua/laws.hpp"

#include <chrono>
#include <functional>
#include <random>
#include <stdexcept>

#include "decidua/coproducts.hpp"
#include "decidua/decision.hpp"
#include "decidua/errors.hpp"
#include "decidua/flowchart/corpus.hpp"
#include "decidua/flowchart/parser.hpp"
#include "decidua/flowchart/semantics.hpp"
#include "decidua/generators.hpp"
#include "decidua/json_io.hpp"
#include "decidua/kleene.hpp"
#include "decidua/logic.hpp"

namespace decidua {

namespace {

constexpr std::size_t kMaxFailuresPerLaw = 5;

struct Ctx {
  explicit Ctx(const RunOptions& options) : opts(options), rng(options.seed) {}

  const RunOptions& opts;
  std::mt19937_64 rng;
  const std::set<std::string>* declared = nullptr;

  std::int64_t cases = 0;
  std::map<std::string, std::int64_t> per_law;
  std::map<std::string, std::vector<LawFailure>> failures_by_law;
  std::set<std::string> exercised;

  bool exhaustive() const { return opts.exhaustive; }
  long trials() const { return opts.trials; }
  int cap(int dflt) const { return opts.max_size >= 0 ? opts.max_size : dflt; }

  void check(const char* law, bool ok,
             std::initializer_list<const PMap*> witness = {}) {
    if (declared != nullptr && declared->count(law) == 0) {
      throw std::logic_error(std::string("law '") + law +
                             "' is not in the documented registry");
    }
    ++cases;
    ++per_law[law];
    exercised.insert(law);
    if (!ok) {
      auto& bucket = failures_by_law[law];
      if (bucket.size() < kMaxFailuresPerLaw) {
        LawFailure failure;
        failure.law = law;
        for (const PMap* w : witness) {
          failure.counterexample.push_back(pmap_to_json(*w));
        }
        bucket.push_back(std::move(failure));
      }
    }
  }
};

// ---------------------------------------------------------------------------
// Instance generators. Exhaustive mode enumerates all instances up to the
// size cap; random mode draws trials() instances instead.
// ---------------------------------------------------------------------------

template <typename Fn>
void each_object(Ctx& c, int cap, Fn fn) {
  if (c.exhaustive()) {
    for (const FinObj& x : canonical_atoms(cap)) fn(x);
  } else {
    for (long t = 0; t < c.trials(); ++t) fn(random_atom(c.rng, cap));
  }
}

template <typename Fn>
void each_object_pair(Ctx& c, int cap, Fn fn) {
  if (c.exhaustive()) {
    for (const FinObj& x : canonical_atoms(cap))
      for (const FinObj& y : canonical_atoms(cap)) fn(x, y);
  } else {
    for (long t = 0; t < c.trials(); ++t) {
      fn(random_atom(c.rng, cap), random_atom(c.rng, cap));
    }
  }
}

// f : X -> Y
template <typename Fn>
void each_pmap(Ctx& c, int cap, Fn fn) {
  if (c.exhaustive()) {
    for (const FinObj& x : canonical_atoms(cap))
      for (const FinObj& y : canonical_atoms(cap))
        for (const PMap& f : enumerate_pmaps(x, y)) fn(f);
  } else {
    for (long t = 0; t < c.trials(); ++t) {
      FinObj x = random_atom(c.rng, cap), y = random_atom(c.rng, cap);
      fn(random_pmap(x, y, c.rng));
    }
  }
}

// f : X -> Y, g : X -> Z
template <typename Fn>
void each_shared_dom_pair(Ctx& c, int cap, Fn fn) {
  if (c.exhaustive()) {
    for (const FinObj& x : canonical_atoms(cap))
      for (const FinObj& y : canonical_atoms(cap))
        for (const FinObj& z : canonical_atoms(cap))
          for (const PMap& f : enumerate_pmaps(x, y))
            for (const PMap& g : enumerate_pmaps(x, z)) fn(f, g);
  } else {
    for (long t = 0; t < c.trials(); ++t) {
      FinObj x = random_atom(c.rng, cap);
      FinObj y = random_atom(c.rng, cap), z = random_atom(c.rng, cap);
      fn(random_pmap(x, y, c.rng), random_pmap(x, z, c.rng));
    }
  }
}

// f : X -> Y, g : Y -> Z
template <typename Fn>
void each_composable(Ctx& c, int cap, Fn fn) {
  if (c.exhaustive()) {
    for (const FinObj& x : canonical_atoms(cap))
      for (const FinObj& y : canonical_atoms(cap))
        for (const FinObj& z : canonical_atoms(cap))
          for (const PMap& f : enumerate_pmaps(x, y))
            for (const PMap& g : enumerate_pmaps(y, z)) fn(f, g);
  } else {
    for (long t = 0; t < c.trials(); ++t) {
      FinObj x = random_atom(c.rng, cap);
      FinObj y = random_atom(c.rng, cap), z = random_atom(c.rng, cap);
      fn(random_pmap(x, y, c.rng), random_pmap(y, z, c.rng));
    }
  }
}

// f : X -> Z, g : Y -> Z
template <typename Fn>
void each_cospan(Ctx& c, int cap, Fn fn) {
  if (c.exhaustive()) {
    for (const FinObj& x : canonical_atoms(cap))
      for (const FinObj& y : canonical_atoms(cap))
        for (const FinObj& z : canonical_atoms(cap))
          for (const PMap& f : enumerate_pmaps(x, z))
            for (const PMap& g : enumerate_pmaps(y, z)) fn(f, g);
  } else {
    for (long t = 0; t < c.trials(); ++t) {
      FinObj x = random_atom(c.rng, cap), y = random_atom(c.rng, cap);
      FinObj z = random_atom(c.rng, cap);
      fn(random_pmap(x, z, c.rng), random_pmap(y, z, c.rng));
    }
  }
}

// f, g : X -> Y (same hom-set)
template <typename Fn>
void each_homset_pair(Ctx& c, int cap, Fn fn) {
  if (c.exhaustive()) {
    for (const FinObj& x : canonical_atoms(cap))
      for (const FinObj& y : canonical_atoms(cap))
        for (const PMap& f : enumerate_pmaps(x, y))
          for (const PMap& g : enumerate_pmaps(x, y)) fn(f, g);
  } else {
    for (long t = 0; t < c.trials(); ++t) {
      FinObj x = random_atom(c.rng, cap), y = random_atom(c.rng, cap);
      fn(random_pmap(x, y, c.rng), random_pmap(x, y, c.rng));
    }
  }
}

// g, g2 : Y -> Z and f : X -> Y
template <typename Fn>
void each_homset_pair_with_pre(Ctx& c, int cap, Fn fn) {
  if (c.exhaustive()) {
    for (const FinObj& x : canonical_atoms(cap))
      for (const FinObj& y : canonical_atoms(cap))
        for (const FinObj& z : canonical_atoms(cap))
          for (const PMap& g : enumerate_pmaps(y, z))
            for (const PMap& g2 : enumerate_pmaps(y, z))
              for (const PMap& f : enumerate_pmaps(x, y)) fn(g, g2, f);
  } else {
    for (long t = 0; t < c.trials(); ++t) {
      FinObj x = random_atom(c.rng, cap);
      FinObj y = random_atom(c.rng, cap), z = random_atom(c.rng, cap);
      fn(random_pmap(y, z, c.rng), random_pmap(y, z, c.rng),
         random_pmap(x, y, c.rng));
    }
  }
}

// f, g : X -> Y with h : Y -> Z and h2 : W -> X
template <typename Fn>
void each_homset_pair_with_post_pre(Ctx& c, int cap, Fn fn) {
  if (c.exhaustive()) {
    for (const FinObj& x : canonical_atoms(cap))
      for (const FinObj& y : canonical_atoms(cap))
        for (const FinObj& z : canonical_atoms(cap))
          for (const FinObj& w : canonical_atoms(cap))
            for (const PMap& f : enumerate_pmaps(x, y))
              for (const PMap& g : enumerate_pmaps(x, y))
                for (const PMap& h : enumerate_pmaps(y, z))
                  for (const PMap& h2 : enumerate_pmaps(w, x))
                    fn(f, g, h, h2);
  } else {
    for (long t = 0; t < c.trials(); ++t) {
      FinObj x = random_atom(c.rng, cap), y = random_atom(c.rng, cap);
      FinObj z = random_atom(c.rng, cap), w = random_atom(c.rng, cap);
      fn(random_pmap(x, y, c.rng), random_pmap(x, y, c.rng),
         random_pmap(y, z, c.rng), random_pmap(w, x, c.rng));
    }
  }
}

// f, f2 : X -> Y and g, g2 : Z -> W
template <typename Fn>
void each_two_homset_pairs(Ctx& c, int cap, Fn fn) {
  if (c.exhaustive()) {
    for (const FinObj& x : canonical_atoms(cap))
      for (const FinObj& y : canonical_atoms(cap))
        for (const FinObj& z : canonical_atoms(cap))
          for (const FinObj& w : canonical_atoms(cap))
            for (const PMap& f : enumerate_pmaps(x, y))
              for (const PMap& f2 : enumerate_pmaps(x, y))
                for (const PMap& g : enumerate_pmaps(z, w))
                  for (const PMap& g2 : enumerate_pmaps(z, w))
                    fn(f, f2, g, g2);
  } else {
    for (long t = 0; t < c.trials(); ++t) {
      FinObj x = random_atom(c.rng, cap), y = random_atom(c.rng, cap);
      FinObj z = random_atom(c.rng, cap), w = random_atom(c.rng, cap);
      fn(random_pmap(x, y, c.rng), random_pmap(x, y, c.rng),
         random_pmap(z, w, c.rng), random_pmap(z, w, c.rng));
    }
  }
}

// f : X -> Y, g : Z -> W, fully independent
template <typename Fn>
void each_independent_pair(Ctx& c, int cap, Fn fn) {
  if (c.exhaustive()) {
    for (const FinObj& x : canonical_atoms(cap))
      for (const FinObj& y : canonical_atoms(cap))
        for (const FinObj& z : canonical_atoms(cap))
          for (const FinObj& w : canonical_atoms(cap))
            for (const PMap& f : enumerate_pmaps(x, y))
              for (const PMap& g : enumerate_pmaps(z, w)) fn(f, g);
  } else {
    for (long t = 0; t < c.trials(); ++t) {
      FinObj x = random_atom(c.rng, cap), y = random_atom(c.rng, cap);
      FinObj z = random_atom(c.rng, cap), w = random_atom(c.rng, cap);
      fn(random_pmap(x, y, c.rng), random_pmap(z, w, c.rng));
    }
  }
}

// f : X -> Y+Z
template <typename Fn>
void each_sum_targeted(Ctx& c, int cap, Fn fn) {
  if (c.exhaustive()) {
    for (const FinObj& x : canonical_atoms(cap))
      for (const FinObj& y : canonical_atoms(cap))
        for (const FinObj& z : canonical_atoms(cap))
          for (const PMap& f : enumerate_pmaps(x, sum_obj(y, z))) fn(f);
  } else {
    for (long t = 0; t < c.trials(); ++t) {
      FinObj x = random_atom(c.rng, cap);
      FinObj y = random_atom(c.rng, cap), z = random_atom(c.rng, cap);
      fn(random_pmap(x, sum_obj(y, z), c.rng));
    }
  }
}

// f : X -> Y+Z with g : W -> X
template <typename Fn>
void each_sum_targeted_with_pre(Ctx& c, int cap, Fn fn) {
  if (c.exhaustive()) {
    for (const FinObj& x : canonical_atoms(cap))
      for (const FinObj& y : canonical_atoms(cap))
        for (const FinObj& z : canonical_atoms(cap))
          for (const FinObj& w : canonical_atoms(cap))
            for (const PMap& f : enumerate_pmaps(x, sum_obj(y, z)))
              for (const PMap& g : enumerate_pmaps(w, x)) fn(f, g);
  } else {
    for (long t = 0; t < c.trials(); ++t) {
      FinObj x = random_atom(c.rng, cap), w = random_atom(c.rng, cap);
      FinObj y = random_atom(c.rng, cap), z = random_atom(c.rng, cap);
      fn(random_pmap(x, sum_obj(y, z), c.rng), random_pmap(w, x, c.rng));
    }
  }
}

// f : X -> Y+Z with a restriction idempotent e on X
template <typename Fn>
void each_sum_targeted_with_idem(Ctx& c, int cap, Fn fn) {
  if (c.exhaustive()) {
    for (const FinObj& x : canonical_atoms(cap))
      for (const FinObj& y : canonical_atoms(cap))
        for (const FinObj& z : canonical_atoms(cap))
          for (const PMap& f : enumerate_pmaps(x, sum_obj(y, z)))
            for (const PMap& e : restriction_idempotents(x)) fn(f, e);
  } else {
    for (long t = 0; t < c.trials(); ++t) {
      FinObj x = random_atom(c.rng, cap);
      FinObj y = random_atom(c.rng, cap), z = random_atom(c.rng, cap);
      fn(random_pmap(x, sum_obj(y, z), c.rng),
         restriction(random_pmap(x, x, c.rng)));
    }
  }
}

template <typename Fn>
void each_decision(Ctx& c, int cap, Fn fn) {
  if (c.exhaustive()) {
    for (const FinObj& x : canonical_atoms(cap))
      for (const Decision& p : all_decisions(x)) fn(p);
  } else {
    for (long t = 0; t < c.trials(); ++t) {
      FinObj x = random_atom(c.rng, cap);
      fn(random_decision(x, c.rng));
    }
  }
}

template <typename Fn>
void each_decision_pair(Ctx& c, int cap, Fn fn) {
  if (c.exhaustive()) {
    for (const FinObj& x : canonical_atoms(cap)) {
      auto all = all_decisions(x);
      for (const Decision& p : all)
        for (const Decision& q : all) fn(p, q);
    }
  } else {
    for (long t = 0; t < c.trials(); ++t) {
      FinObj x = random_atom(c.rng, cap);
      fn(random_decision(x, c.rng), random_decision(x, c.rng));
    }
  }
}

template <typename Fn>
void each_decision_triple(Ctx& c, int cap, Fn fn) {
  if (c.exhaustive()) {
    for (const FinObj& x : canonical_atoms(cap)) {
      auto all = all_decisions(x);
      for (const Decision& p : all)
        for (const Decision& q : all)
          for (const Decision& r : all) fn(p, q, r);
    }
  } else {
    for (long t = 0; t < c.trials(); ++t) {
      FinObj x = random_atom(c.rng, cap);
      fn(random_decision(x, c.rng), random_decision(x, c.rng),
         random_decision(x, c.rng));
    }
  }
}

// d on X with g : W -> X
template <typename Fn>
void each_decision_with_pre(Ctx& c, int cap, Fn fn) {
  if (c.exhaustive()) {
    for (const FinObj& x : canonical_atoms(cap))
      for (const FinObj& w : canonical_atoms(cap))
        for (const Decision& d : all_decisions(x))
          for (const PMap& g : enumerate_pmaps(w, x)) fn(d, g);
  } else {
    for (long t = 0; t < c.trials(); ++t) {
      FinObj x = random_atom(c.rng, cap), w = random_atom(c.rng, cap);
      fn(random_decision(x, c.rng), random_pmap(w, x, c.rng));
    }
  }
}

// f : X -> Y with decisions p, q on Y
template <typename Fn>
void each_map_with_decision_pair(Ctx& c, int cap, Fn fn) {
  if (c.exhaustive()) {
    for (const FinObj& x : canonical_atoms(cap))
      for (const FinObj& y : canonical_atoms(cap)) {
        auto all = all_decisions(y);
        for (const PMap& f : enumerate_pmaps(x, y))
          for (const Decision& p : all)
            for (const Decision& q : all) fn(f, p, q);
      }
  } else {
    for (long t = 0; t < c.trials(); ++t) {
      FinObj x = random_atom(c.rng, cap), y = random_atom(c.rng, cap);
      fn(random_pmap(x, y, c.rng), random_decision(y, c.rng),
         random_decision(y, c.rng));
    }
  }
}

// p : X -> 1+1
template <typename Fn>
void each_predicate(Ctx& c, int cap, Fn fn) {
  FinObj two = one_plus_one();
  if (c.exhaustive()) {
    for (const FinObj& x : canonical_atoms(cap))
      for (const PMap& p : enumerate_pmaps(x, two)) fn(p);
  } else {
    for (long t = 0; t < c.trials(); ++t) {
      FinObj x = random_atom(c.rng, cap);
      fn(random_pmap(x, two, c.rng));
    }
  }
}

// p : X -> 1+1 with g : W -> X
template <typename Fn>
void each_predicate_with_pre(Ctx& c, int cap, Fn fn) {
  FinObj two = one_plus_one();
  if (c.exhaustive()) {
    for (const FinObj& x : canonical_atoms(cap))
      for (const FinObj& w : canonical_atoms(cap))
        for (const PMap& p : enumerate_pmaps(x, two))
          for (const PMap& g : enumerate_pmaps(w, x)) fn(p, g);
  } else {
    for (long t = 0; t < c.trials(); ++t) {
      FinObj x = random_atom(c.rng, cap), w = random_atom(c.rng, cap);
      fn(random_pmap(x, two, c.rng), random_pmap(w, x, c.rng));
    }
  }
}

// ---------------------------------------------------------------------------
// Suites
// ---------------------------------------------------------------------------

void suite_restriction(Ctx& c) {
  int cap = c.cap(c.exhaustive() ? 3 : 6);
  each_pmap(c, cap, [&](const PMap& f) {
    c.check("R1", compose(f, restriction(f)) == f, {&f});
  });
  each_shared_dom_pair(c, cap, [&](const PMap& f, const PMap& g) {
    PMap rf = restriction(f), rg = restriction(g);
    c.check("R2", compose(rf, rg) == compose(rg, rf), {&f, &g});
    c.check("R3", restriction(compose(f, rg)) == compose(rf, rg), {&f, &g});
  });
  each_composable(c, cap, [&](const PMap& f, const PMap& g) {
    c.check("R4",
            compose(restriction(g), f) ==
                compose(f, restriction(compose(g, f))),
            {&f, &g});
  });

  // Partial inverses: defining equations, involution, and uniqueness against
  // enumeration of all candidate inverses.
  int icap = std::min(c.exhaustive() ? cap : 3, 3);
  each_pmap(c, icap, [&](const PMap& f) {
    auto inv = partial_inverse(f);
    if (inv) {
      c.check("pinv-equations",
              compose(*inv, f) == restriction(f) &&
                  compose(f, *inv) == restriction(*inv),
              {&f});
      auto back = partial_inverse(*inv);
      c.check("pinv-involution", back.has_value() && *back == f, {&f});
    }
    long count = 0;
    bool matches = true;
    for (const PMap& h : enumerate_pmaps(f.cod(), f.dom())) {
      if (compose(h, f) == restriction(f) && compose(f, h) == restriction(h)) {
        ++count;
        if (!inv || h != *inv) matches = false;
      }
    }
    c.check("pinv-unique", inv ? (count == 1 && matches) : count == 0, {&f});
  });
}

void suite_order(Ctx& c) {
  int bin = c.cap(c.exhaustive() ? 3 : 6);
  int ter = c.cap(c.exhaustive() ? 2 : 4);

  each_homset_pair_with_pre(c, ter,
                            [&](const PMap& g, const PMap& g2, const PMap& f) {
    if (natural_leq(g, g2)) {
      c.check("ord-precompose",
              natural_leq(restriction(compose(g, f)),
                          restriction(compose(g2, f))),
              {&g, &g2, &f});
    }
  });
  each_composable(c, bin, [&](const PMap& f, const PMap& g) {
    c.check("ord-composite-restriction",
            natural_leq(restriction(compose(g, f)), restriction(f)), {&f, &g});
  });
  each_homset_pair_with_post_pre(
      c, ter, [&](const PMap& f, const PMap& g, const PMap& h, const PMap& h2) {
        if (natural_leq(f, g)) {
          c.check("ord-compose-monotone",
                  natural_leq(compose(h, f), compose(h, g)) &&
                      natural_leq(compose(f, h2), compose(g, h2)),
                  {&f, &g, &h, &h2});
        }
      });
  each_two_homset_pairs(
      c, ter, [&](const PMap& f, const PMap& f2, const PMap& g, const PMap& g2) {
        bool componentwise = natural_leq(f, f2) && natural_leq(g, g2);
        bool summed = natural_leq(sum_map(f, g), sum_map(f2, g2));
        c.check("ord-sum-monotone", componentwise == summed, {&f, &f2, &g, &g2});
      });
  each_shared_dom_pair(c, bin, [&](const PMap& f0, const PMap& g) {
    // Only endomorphisms can sit below a restriction idempotent.
    if (f0.dom() != f0.cod()) return;
    if (natural_leq(f0, restriction(g))) {
      c.check("ord-below-idempotent", f0 == restriction(f0), {&f0, &g});
    }
  });
}

void suite_coproduct(Ctx& c) {
  int cap = c.cap(c.exhaustive() ? 3 : 6);
  each_cospan(c, cap, [&](const PMap& f, const PMap& g) {
    PMap cp = copair(f, g);
    c.check("copair-inj1", compose(cp, inj1(f.dom(), g.dom())) == f, {&f, &g});
    c.check("copair-inj2", compose(cp, inj2(f.dom(), g.dom())) == g, {&f, &g});
  });
  int ucap = std::min(c.cap(2), 2);
  each_cospan(c, ucap, [&](const PMap& f, const PMap& g) {
    if (f.dom().size() + g.dom().size() > kEnumerateCap) return;
    PMap cp = copair(f, g);
    PMap i1 = inj1(f.dom(), g.dom()), i2 = inj2(f.dom(), g.dom());
    long count = 0;
    bool matches = true;
    for (const PMap& h : enumerate_pmaps(sum_obj(f.dom(), g.dom()), f.cod())) {
      if (compose(h, i1) == f && compose(h, i2) == g) {
        ++count;
        if (h != cp) matches = false;
      }
    }
    c.check("copair-unique", count == 1 && matches, {&f, &g});
  });
  each_object_pair(c, cap, [&](const FinObj& x, const FinObj& y) {
    PMap i1 = inj1(x, y), i2 = inj2(x, y);
    c.check("inj-total", is_total(i1) && is_total(i2), {&i1, &i2});
    auto p1 = partial_inverse(i1), p2 = partial_inverse(i2);
    c.check("inj-pinv",
            p1.has_value() && *p1 == proj1_dagger(x, y) && p2.has_value() &&
                *p2 == proj2_dagger(x, y),
            {&i1, &i2});
  });
  each_pmap(c, cap, [&](const PMap& f) {
    c.check("codiagonal-natural",
            compose(f, codiagonal(f.dom())) ==
                compose(codiagonal(f.cod()), sum_map(f, f)),
            {&f});
    c.check("zero-least", natural_leq(zero_map(f.dom(), f.cod()), f), {&f});
  });
  each_independent_pair(c, c.cap(c.exhaustive() ? 2 : 4),
                        [&](const PMap& f, const PMap& g) {
    c.check("twist-natural",
            compose(twist(f.cod(), g.cod()), sum_map(f, g)) ==
                compose(sum_map(g, f), twist(f.dom(), g.dom())),
            {&f, &g});
  });
}

void suite_decision(Ctx& c) {
  int cap = std::min(c.cap(2), 2);  // enumeration of maps X -> X+X
  each_sum_targeted(c, cap, [&](const PMap& f) {
    Decision d = decide(f);
    c.check("decision-laws-hold", check_decision_laws(d, f), {&f});

    const FinObj& x = f.dom();
    if (2 * x.size() > kEnumerateCap) return;
    FinObj xx = sum_obj(x, x);
    long count = 0;
    bool matches = true;
    for (const PMap& p : enumerate_pmaps(x, xx)) {
      if (check_decision_laws(p, f)) {
        ++count;
        if (p != d.underlying()) matches = false;
      }
    }
    c.check("decision-unique", count == 1 && matches, {&f});

    const FinObj& yo = f.cod().left();
    const FinObj& zo = f.cod().right();
    PMap r1 = restriction(compose(proj1_dagger(yo, zo), f));
    PMap r2 = restriction(compose(proj2_dagger(yo, zo), f));
    for (const PMap& p : enumerate_pmaps(x, xx)) {
      if (compose(proj1_dagger(x, x), p) == r1 &&
          compose(proj2_dagger(x, x), p) == r2) {
        c.check("decision-unique-components", p == d.underlying(), {&p, &f});
      }
    }
  });
  each_decision(c, c.cap(c.exhaustive() ? 3 : 4), [&](const Decision& d) {
    c.check("transform-identity", transform(identity(d.carrier()), d) == d,
            {&d.underlying()});
  });
  int tcap = c.cap(2);
  each_decision_with_pre(c, tcap, [&](const Decision& d, const PMap& g) {
    // Split g's domain once more for the composite functor law.
    if (c.exhaustive()) {
      for (const FinObj& w : canonical_atoms(tcap)) {
        for (const PMap& f : enumerate_pmaps(w, g.dom())) {
          c.check("transform-compose",
                  transform(compose(g, f), d) ==
                      transform(f, transform(g, d)),
                  {&d.underlying(), &g, &f});
        }
      }
    } else {
      FinObj w = random_atom(c.rng, tcap);
      PMap f = random_pmap(w, g.dom(), c.rng);
      c.check("transform-compose",
              transform(compose(g, f), d) == transform(f, transform(g, d)),
              {&d.underlying(), &g, &f});
    }
  });
}

void suite_utility(Ctx& c) {
  int cap = c.cap(c.exhaustive() ? 2 : 4);
  each_sum_targeted(c, cap, [&](const PMap& f) {
    const FinObj& x = f.dom();
    const FinObj& yo = f.cod().left();
    const FinObj& zo = f.cod().right();
    Decision d = decide(f);
    const PMap& du = d.underlying();
    PMap r1 = restriction(compose(proj1_dagger(yo, zo), f));
    PMap r2 = restriction(compose(proj2_dagger(yo, zo), f));

    bool self = decide(du) == d;
    bool self_sum = compose(sum_map(du, du), du) ==
                    compose(sum_map(inj1(x, x), inj2(x, x)), du);
    c.check("util-self-decision", self && self_sum, {&f});

    PMap dinv = decision_inverse(d);
    c.check("util-inverse-formula", dinv == copair(r1, r2), {&f});
    c.check("util-inverse-restriction", restriction(dinv) == sum_map(r1, r2),
            {&f});
    c.check("util-same-restriction", restriction(du) == restriction(f), {&f});
    c.check("util-twist",
            compose(twist(x, x), du) ==
                decide(compose(twist(yo, zo), f)).underlying(),
            {&f});
    c.check("util-components",
            compose(proj1_dagger(x, x), du) == r1 &&
                compose(proj2_dagger(x, x), du) == r2,
            {&f});
  });
  each_sum_targeted_with_pre(c, cap, [&](const PMap& f, const PMap& g) {
    Decision d = decide(f);
    c.check("util-decide-precompose",
            decide(compose(d.underlying(), g)) == decide(compose(f, g)),
            {&f, &g});
    c.check("util-slide",
            compose(d.underlying(), g) ==
                compose(sum_map(g, g), decide(compose(f, g)).underlying()),
            {&f, &g});
  });
  each_sum_targeted_with_idem(c, cap, [&](const PMap& f, const PMap& e) {
    Decision d = decide(f);
    PMap ee = sum_map(e, e);
    PMap eed = compose(ee, d.underlying());
    PMap de = compose(d.underlying(), e);
    c.check("util-idem-absorb", eed == compose(eed, e), {&f, &e});
    c.check("util-idem-commute", is_decision(de) && de == eed, {&f, &e});
    c.check("util-idem-decide", de == decide(compose(f, e)).underlying(),
            {&f, &e});
  });
}

void suite_dmq(Ctx& c) {
  int bin = c.cap(c.exhaustive() ? 3 : 4);
  int ter = c.cap(c.exhaustive() ? 2 : 4);

  each_decision(c, bin, [&](const Decision& p) {
    const FinObj& x = p.carrier();
    c.check("dmq-conj-idempotent", conj(p, p) == p, {&p.underlying()});
    c.check("dmq-disj-idempotent", disj(p, p) == p, {&p.underlying()});
    c.check("dmq-double-negation", neg(neg(p)) == p, {&p.underlying()});
    c.check("dmq-top-unit", conj(p, top(x)) == p, {&p.underlying()});
    c.check("dmq-bot-unit", disj(p, bot(x)) == p, {&p.underlying()});
    c.check("ridm-neg",
            restriction(neg(p).underlying()) == restriction(p.underlying()),
            {&p.underlying()});
  });

  each_decision_pair(c, bin, [&](const Decision& p, const Decision& q) {
    const FinObj& x = p.carrier();
    Decision cpq = conj(p, q);
    Decision dpq = disj(p, q);
    c.check("dmq-conj-commutative", cpq == conj(q, p),
            {&p.underlying(), &q.underlying()});
    c.check("dmq-disj-commutative", dpq == disj(q, p),
            {&p.underlying(), &q.underlying()});
    c.check("dmq-de-morgan-conj", neg(cpq) == disj(neg(p), neg(q)),
            {&p.underlying(), &q.underlying()});
    c.check("dmq-de-morgan-disj", neg(dpq) == conj(neg(p), neg(q)),
            {&p.underlying(), &q.underlying()});
    c.check("dmq-wellformed",
            is_decision(cpq.underlying()) && is_decision(dpq.underlying()) &&
                is_decision(neg(p).underlying()) &&
                is_decision(top(x).underlying()) &&
                is_decision(bot(x).underlying()),
            {&p.underlying(), &q.underlying()});

    // The partial-inverse leg of each connective can be collapsed to the
    // codiagonal without changing the composite.
    PMap simpler_conj = compose(
        sum_map(identity(x), codiagonal(x)),
        compose(assoc_right(x, x, x),
                compose(sum_map(q.underlying(), restriction(q.underlying())),
                        p.underlying())));
    PMap simpler_disj = compose(
        sum_map(codiagonal(x), identity(x)),
        compose(assoc_left(x, x, x),
                compose(sum_map(restriction(q.underlying()), q.underlying()),
                        p.underlying())));
    c.check("dmq-simplified-conj", cpq.underlying() == simpler_conj,
            {&p.underlying(), &q.underlying()});
    c.check("dmq-simplified-disj", dpq.underlying() == simpler_disj,
            {&p.underlying(), &q.underlying()});
    c.check("dmq-connective-pisom",
            partial_inverse(cpq.underlying()).has_value() &&
                partial_inverse(dpq.underlying()).has_value(),
            {&p.underlying(), &q.underlying()});

    PMap rp = restriction(p.underlying());
    PMap rq = restriction(q.underlying());
    PMap rc = restriction(cpq.underlying());
    PMap rd = restriction(dpq.underlying());
    c.check("ridm-conj", rc == compose(rp, rq),
            {&p.underlying(), &q.underlying()});
    c.check("ridm-disj", rd == compose(rp, rq),
            {&p.underlying(), &q.underlying()});
    c.check("ridm-conj-below", natural_leq(rc, rp) && natural_leq(rc, rq),
            {&p.underlying(), &q.underlying()});
    c.check("ridm-disj-below", natural_leq(rd, rp) && natural_leq(rd, rq),
            {&p.underlying(), &q.underlying()});
  });

  each_decision_triple(
      c, ter, [&](const Decision& p, const Decision& q, const Decision& r) {
        c.check("dmq-conj-associative",
                conj(p, conj(q, r)) == conj(conj(p, q), r),
                {&p.underlying(), &q.underlying(), &r.underlying()});
        c.check("dmq-disj-associative",
                disj(p, disj(q, r)) == disj(disj(p, q), r),
                {&p.underlying(), &q.underlying(), &r.underlying()});
        c.check("dmq-conj-distributive",
                conj(p, disj(q, r)) == disj(conj(p, q), conj(p, r)),
                {&p.underlying(), &q.underlying(), &r.underlying()});
        c.check("dmq-disj-distributive",
                disj(p, conj(q, r)) == conj(disj(p, q), disj(p, r)),
                {&p.underlying(), &q.underlying(), &r.underlying()});
      });
}

void suite_homomorphism(Ctx& c) {
  int cap = c.cap(c.exhaustive() ? 2 : 3);
  each_pmap(c, cap, [&](const PMap& f) {
    const FinObj& x = f.dom();
    const FinObj& y = f.cod();
    if (is_total(f)) {
      c.check("homo-total-units",
              transform(f, top(y)) == top(x) && transform(f, bot(y)) == bot(x),
              {&f});
    } else {
      c.check("homo-nontotal-top",
              transform(f, top(y)).underlying() ==
                  compose(inj1(x, x), restriction(f)),
              {&f});
    }
  });
  each_map_with_decision_pair(
      c, cap, [&](const PMap& f, const Decision& p, const Decision& q) {
        c.check("homo-neg", transform(f, neg(p)) == neg(transform(f, p)),
                {&f, &p.underlying()});
        c.check("homo-conj",
                transform(f, conj(p, q)) ==
                    conj(transform(f, p), transform(f, q)),
                {&f, &p.underlying(), &q.underlying()});
        c.check("homo-disj",
                transform(f, disj(p, q)) ==
                    disj(transform(f, p), transform(f, q)),
                {&f, &p.underlying(), &q.underlying()});
        if (entails(p, q)) {
          c.check("homo-entailment", entails(transform(f, p), transform(f, q)),
                  {&f, &p.underlying(), &q.underlying()});
        }
      });
}

void suite_entailment(Ctx& c) {
  int cap = c.cap(c.exhaustive() ? 3 : 4);
  each_decision_pair(c, cap, [&](const Decision& p, const Decision& q) {
    const FinObj& x = p.carrier();
    PMap k1p = compose(proj1_dagger(x, x), p.underlying());
    PMap k1q = compose(proj1_dagger(x, x), q.underlying());
    bool componentwise =
        natural_leq(k1p, k1q) &&
        natural_leq(restriction(p.underlying()), restriction(q.underlying()));
    c.check("entail-characterization", entails(p, q) == componentwise,
            {&p.underlying(), &q.underlying()});
    c.check("order-anti-isomorphism",
            conj_leq(p, q) == disj_leq(neg(q), neg(p)),
            {&p.underlying(), &q.underlying()});
  });

  // The two derived orders disagree already on one point.
  FinObj x = canonical_atom(1);
  bool found = false;
  for (const Decision& p : all_decisions(x)) {
    for (const Decision& q : all_decisions(x)) {
      if (conj_leq(p, q) && !disj_leq(p, q)) found = true;
    }
  }
  c.check("orders-differ-witness", found);
}

void suite_boolean(Ctx& c) {
  int cap = c.cap(c.exhaustive() ? 3 : 4);
  if (c.exhaustive()) {
    for (const FinObj& x : canonical_atoms(cap)) {
      auto totals = total_decisions(x);
      for (const Decision& p : totals) {
        for (const Decision& q : totals) {
          c.check("bool-absorption-conj", p == conj(p, disj(p, q)),
                  {&p.underlying(), &q.underlying()});
          c.check("bool-absorption-disj", p == disj(p, conj(p, q)),
                  {&p.underlying(), &q.underlying()});
        }
        c.check("bool-contradiction", conj(p, neg(p)) == bot(x),
                {&p.underlying()});
        c.check("bool-tertium-non-datur", disj(p, neg(p)) == top(x),
                {&p.underlying()});
      }
    }
  } else {
    for (long t = 0; t < c.trials(); ++t) {
      FinObj x = random_atom(c.rng, cap);
      auto totals = total_decisions(x);
      const Decision& p = totals[c.rng() % totals.size()];
      const Decision& q = totals[c.rng() % totals.size()];
      c.check("bool-absorption-conj", p == conj(p, disj(p, q)),
              {&p.underlying(), &q.underlying()});
      c.check("bool-absorption-disj", p == disj(p, conj(p, q)),
              {&p.underlying(), &q.underlying()});
      c.check("bool-contradiction", conj(p, neg(p)) == bot(x),
              {&p.underlying()});
      c.check("bool-tertium-non-datur", disj(p, neg(p)) == top(x),
              {&p.underlying()});
    }
  }

  if (c.opts.inject_nontotal_boolean) {
    // Strictness demonstration: over arbitrary decisions the absorption law
    // must break, and the breakages must be reported as counterexamples.
    each_decision_pair(c, std::min(cap, 2),
                       [&](const Decision& p, const Decision& q) {
      c.check("bool-absorption-conj", p == conj(p, disj(p, q)),
              {&p.underlying(), &q.underlying()});
    });
  }

  // Without totality the Boolean laws genuinely fail; exhibit witnesses.
  FinObj x1 = canonical_atom(1);
  bool absorption_broken = false;
  bool tertium_broken = false;
  for (const Decision& p : all_decisions(x1)) {
    for (const Decision& q : all_decisions(x1)) {
      if (p != conj(p, disj(p, q))) absorption_broken = true;
    }
    if (disj(p, neg(p)) != top(x1)) tertium_broken = true;
  }
  c.check("bool-absorption-strictness-witness", absorption_broken);
  c.check("bool-tertium-strictness-witness", tertium_broken);
}

void suite_bridge(Ctx& c) {
  // Table cells on a one-element carrier.
  FinObj x1 = canonical_atom(1);
  const std::string& e1 = x1.elems()[0];
  auto dv = [&](Kleene3 v) {
    return decision_from_valuation(x1, {{e1, v}});
  };
  for (Kleene3 a : kKleeneValues) {
    c.check("bridge-negation-table",
            read_pointwise(neg(dv(a)), e1) == weak_not(a));
    for (Kleene3 b : kKleeneValues) {
      c.check("bridge-conjunction-table",
              read_pointwise(conj(dv(a), dv(b)), e1) == weak_and(a, b));
      c.check("bridge-disjunction-table",
              read_pointwise(disj(dv(a), dv(b)), e1) == weak_or(a, b));
    }
  }
  c.check("bridge-units-table",
          read_pointwise(top(x1), e1) == Kleene3::True &&
              read_pointwise(bot(x1), e1) == Kleene3::False);

  // On definite inputs the weak tables are the classical ones.
  for (Kleene3 a : {Kleene3::True, Kleene3::False}) {
    bool a_true = a == Kleene3::True;
    c.check("bridge-classical-fragment",
            weak_not(a) == (a_true ? Kleene3::False : Kleene3::True));
    for (Kleene3 b : {Kleene3::True, Kleene3::False}) {
      bool b_true = b == Kleene3::True;
      c.check("bridge-classical-fragment",
              weak_and(a, b) ==
                  ((a_true && b_true) ? Kleene3::True : Kleene3::False));
      c.check("bridge-classical-fragment",
              weak_or(a, b) ==
                  ((a_true || b_true) ? Kleene3::True : Kleene3::False));
    }
  }

  // Connectives act independently per element: the pointwise reading of each
  // composite equals the table applied to the pointwise readings.
  int cap = c.cap(c.exhaustive() ? 3 : 4);
  each_decision_pair(c, cap, [&](const Decision& p, const Decision& q) {
    bool conj_ok = true, disj_ok = true;
    Decision cpq = conj(p, q);
    Decision dpq = disj(p, q);
    for (const std::string& e : p.carrier().elems()) {
      Kleene3 a = read_pointwise(p, e), b = read_pointwise(q, e);
      conj_ok = conj_ok && read_pointwise(cpq, e) == weak_and(a, b);
      disj_ok = disj_ok && read_pointwise(dpq, e) == weak_or(a, b);
    }
    c.check("bridge-pointwise-conj", conj_ok,
            {&p.underlying(), &q.underlying()});
    c.check("bridge-pointwise-disj", disj_ok,
            {&p.underlying(), &q.underlying()});
  });
  each_decision(c, cap, [&](const Decision& p) {
    bool ok = true;
    Decision np = neg(p);
    for (const std::string& e : p.carrier().elems()) {
      ok = ok && read_pointwise(np, e) == weak_not(read_pointwise(p, e));
    }
    c.check("bridge-pointwise-neg", ok, {&p.underlying()});
  });
  each_object(c, cap, [&](const FinObj& x) {
    bool ok = true;
    Decision t = top(x), b = bot(x);
    for (const std::string& e : x.elems()) {
      ok = ok && read_pointwise(t, e) == Kleene3::True &&
           read_pointwise(b, e) == Kleene3::False;
    }
    c.check("bridge-pointwise-units", ok);
  });
}

void suite_duality(Ctx& c) {
  int cap = c.cap(c.exhaustive() ? 2 : 4);
  each_sum_targeted(c, cap, [&](const PMap& f) {
    Decision d = decide(f);
    c.check("duality-roundtrip-decision", pred_to_dec(dec_to_pred(d)) == d,
            {&f});
    PMap collapse = sum_map(bang(f.cod().left()), bang(f.cod().right()));
    c.check("duality-decide-via-predicate",
            decide(compose(collapse, f)) == d, {&f});
  });
  each_predicate(c, cap, [&](const PMap& p) {
    c.check("duality-roundtrip-predicate", dec_to_pred(pred_to_dec(p)) == p,
            {&p});
  });
  each_predicate_with_pre(c, cap, [&](const PMap& p, const PMap& g) {
    c.check("duality-naturality-pred",
            pred_to_dec(compose(p, g)) == transform(g, pred_to_dec(p)),
            {&p, &g});
  });
  each_decision_with_pre(c, cap, [&](const Decision& d, const PMap& g) {
    c.check("duality-naturality-dec",
            dec_to_pred(transform(g, d)) == compose(dec_to_pred(d), g),
            {&d.underlying(), &g});
  });
}

void suite_flowchart(Ctx& c) {
  namespace fc = decidua::flowchart;
  for (const auto& prog : fc::bundled_corpus()) {
    fc::Module mod = fc::parse_program(prog.source);
    const fc::StateSpace& space = mod.space;
    PMap den = fc::denote(mod.body, space);

    for (const fc::State& s : space.states()) {
      auto operational = fc::run_operational(mod.body, space, s);
      auto denotational = den.value_at(space.encode(s));
      bool agree;
      if (operational.has_value() != denotational.has_value()) {
        agree = false;
      } else if (!operational) {
        agree = true;
      } else {
        agree = space.encode(*operational) == *denotational;
      }
      c.check("fc-adequacy", agree, {&den});
    }

    std::vector<fc::StmtPtr> ifs;
    fc::collect_ifs(mod.body, ifs);
    for (const fc::StmtPtr& node : ifs) {
      Decision guard = pred_to_dec(fc::denote_pred(node->guard, space));
      PMap then_den = fc::denote(node->s1, space);
      PMap else_den = fc::denote(node->s2, space);
      PMap branch = compose(copair(then_den, else_den), guard.underlying());
      for (const fc::State& s : space.states()) {
        std::string key = space.encode(s);
        std::optional<std::string> expected;
        switch (fc::eval_pred(*node->guard, s)) {
          case Kleene3::True:
            expected = then_den.value_at(key);
            break;
          case Kleene3::False:
            expected = else_den.value_at(key);
            break;
          case Kleene3::Undef:
            break;
        }
        c.check("fc-predicate-coherence", branch.value_at(key) == expected,
                {&branch});
      }
    }

    std::vector<fc::StmtPtr> whiles;
    fc::collect_whiles(mod.body, whiles);
    for (const fc::StmtPtr& node : whiles) {
      fc::StmtPtr unrolled = fc::stmt_if(
          node->guard, fc::stmt_seq(node->s1, node), fc::stmt_skip());
      c.check("fc-while-unroll",
              fc::denote(node, space) == fc::denote(unrolled, space), {&den});
    }
  }
}

struct SuiteDef {
  const char* name;
  std::vector<std::string> laws;
  std::function<void(Ctx&)> run;
};

const std::vector<SuiteDef>& suites() {
  static const std::vector<SuiteDef> defs = {
      {"restriction",
       {"R1", "R2", "R3", "R4", "pinv-equations", "pinv-involution",
        "pinv-unique"},
       suite_restriction},
      {"order",
       {"ord-precompose", "ord-composite-restriction", "ord-compose-monotone",
        "ord-sum-monotone", "ord-below-idempotent"},
       suite_order},
      {"coproduct",
       {"copair-inj1", "copair-inj2", "copair-unique", "inj-total", "inj-pinv",
        "codiagonal-natural", "twist-natural", "zero-least"},
       suite_coproduct},
      {"decision",
       {"decision-laws-hold", "decision-unique", "decision-unique-components",
        "transform-identity", "transform-compose"},
       suite_decision},
      {"utility",
       {"util-self-decision", "util-inverse-formula",
        "util-inverse-restriction", "util-same-restriction", "util-twist",
        "util-decide-precompose", "util-slide", "util-idem-absorb",
        "util-idem-commute", "util-idem-decide", "util-components"},
       suite_utility},
      {"dmq",
       {"dmq-conj-idempotent", "dmq-disj-idempotent", "dmq-conj-commutative",
        "dmq-disj-commutative", "dmq-conj-associative", "dmq-disj-associative",
        "dmq-conj-distributive", "dmq-disj-distributive",
        "dmq-double-negation", "dmq-de-morgan-conj", "dmq-de-morgan-disj",
        "dmq-top-unit", "dmq-bot-unit", "dmq-wellformed",
        "dmq-simplified-conj", "dmq-simplified-disj", "dmq-connective-pisom",
        "ridm-neg", "ridm-conj", "ridm-disj", "ridm-conj-below",
        "ridm-disj-below"},
       suite_dmq},
      {"homomorphism",
       {"homo-neg", "homo-conj", "homo-disj", "homo-entailment",
        "homo-total-units", "homo-nontotal-top"},
       suite_homomorphism},
      {"entailment",
       {"entail-characterization", "order-anti-isomorphism",
        "orders-differ-witness"},
       suite_entailment},
      {"boolean",
       {"bool-absorption-conj", "bool-absorption-disj", "bool-contradiction",
        "bool-tertium-non-datur", "bool-absorption-strictness-witness",
        "bool-tertium-strictness-witness"},
       suite_boolean},
      {"bridge",
       {"bridge-negation-table", "bridge-conjunction-table",
        "bridge-disjunction-table", "bridge-units-table",
        "bridge-classical-fragment", "bridge-pointwise-neg",
        "bridge-pointwise-conj", "bridge-pointwise-disj",
        "bridge-pointwise-units"},
       suite_bridge},
      {"duality",
       {"duality-roundtrip-decision", "duality-roundtrip-predicate",
        "duality-decide-via-predicate", "duality-naturality-pred",
        "duality-naturality-dec"},
       suite_duality},
      {"flowchart",
       {"fc-adequacy", "fc-predicate-coherence", "fc-while-unroll"},
       suite_flowchart},
  };
  return defs;
}

}  // namespace

nlohmann::json report_to_json(const LawReport& report) {
  nlohmann::json j;
  j["suite"] = report.suite;
  j["cases"] = report.cases;
  j["failures"] = nlohmann::json::array();
  for (const LawFailure& f : report.failures) {
    nlohmann::json entry;
    entry["law"] = f.law;
    entry["counterexample"] = f.counterexample;
    j["failures"].push_back(std::move(entry));
  }
  j["seed"] = report.seed ? nlohmann::json(*report.seed) : nlohmann::json();
  j["ms"] = report.ms;
  return j;
}

LawReport run_suite(const std::string& name, const RunOptions& opts) {
  const SuiteDef* def = nullptr;
  for (const SuiteDef& d : suites()) {
    if (name == d.name) {
      def = &d;
      break;
    }
  }
  if (def == nullptr) {
    throw UnknownSuiteError("unknown suite '" + name + "'");
  }

  Ctx ctx(opts);
  std::set<std::string> declared(def->laws.begin(), def->laws.end());
  ctx.declared = &declared;

  auto start = std::chrono::steady_clock::now();
  def->run(ctx);
  auto end = std::chrono::steady_clock::now();

  LawReport report;
  report.suite = def->name;
  report.cases = ctx.cases;
  for (const std::string& law : def->laws) {
    auto it = ctx.failures_by_law.find(law);
    if (it == ctx.failures_by_law.end()) continue;
    for (LawFailure& f : it->second) report.failures.push_back(std::move(f));
  }
  if (!opts.exhaustive) report.seed = opts.seed;
  report.ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(end - start)
          .count();
  report.law_cases = std::move(ctx.per_law);
  report.exercised = std::move(ctx.exercised);
  return report;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const SuiteDef& d : suites()) out.push_back(d.name);
    return out;
  }();
  return names;
}

const std::map<std::string, std::vector<std::string>>& documented_laws() {
  static const std::map<std::string, std::vector<std::string>> table = [] {
    std::map<std::string, std::vector<std::string>> out;
    for (const SuiteDef& d : suites()) out[d.name] = d.laws;
    return out;
  }();
  return table;
}

}  // namespace decidua
