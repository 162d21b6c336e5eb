#include "decidua/flowchart/semantics.hpp"

#include <set>

#include "decidua/coproducts.hpp"
#include "decidua/errors.hpp"
#include "decidua/logic.hpp"

namespace decidua::flowchart {

namespace {

std::optional<long> checked_add(long a, long b) {
  long r;
  if (__builtin_add_overflow(a, b, &r)) return std::nullopt;
  return r;
}

std::optional<long> checked_sub(long a, long b) {
  long r;
  if (__builtin_sub_overflow(a, b, &r)) return std::nullopt;
  return r;
}

std::optional<long> checked_mul(long a, long b) {
  long r;
  if (__builtin_mul_overflow(a, b, &r)) return std::nullopt;
  return r;
}

}  // namespace

std::optional<long> eval_aexp(const AExp& e, const State& s) {
  switch (e.kind) {
    case AExp::Kind::Literal:
      return e.value;
    case AExp::Kind::Variable: {
      auto it = s.find(e.name);
      if (it == s.end()) {
        throw UnboundVariableError("variable '" + e.name +
                                   "' is not in the state");
      }
      return it->second;
    }
    case AExp::Kind::Add:
    case AExp::Kind::Sub:
    case AExp::Kind::Mul: {
      auto a = eval_aexp(*e.lhs, s);
      auto b = eval_aexp(*e.rhs, s);
      if (!a || !b) return std::nullopt;
      std::optional<long> r;
      if (e.kind == AExp::Kind::Add) r = checked_add(*a, *b);
      if (e.kind == AExp::Kind::Sub) r = checked_sub(*a, *b);
      if (e.kind == AExp::Kind::Mul) r = checked_mul(*a, *b);
      if (r && *r < 0) return std::nullopt;
      return r;
    }
  }
  throw Error("eval_aexp: unreachable");
}

Kleene3 eval_pred(const Pred& p, const State& s) {
  switch (p.kind) {
    case Pred::Kind::True:
      return Kleene3::True;
    case Pred::Kind::False:
      return Kleene3::False;
    case Pred::Kind::Undef:
      return Kleene3::Undef;
    case Pred::Kind::Compare: {
      auto a = eval_aexp(*p.a, s);
      auto b = eval_aexp(*p.b, s);
      if (!a || !b) return Kleene3::Undef;
      bool holds = false;
      switch (p.op) {
        case Pred::CmpOp::Eq:
          holds = *a == *b;
          break;
        case Pred::CmpOp::Lt:
          holds = *a < *b;
          break;
        case Pred::CmpOp::Le:
          holds = *a <= *b;
          break;
      }
      return holds ? Kleene3::True : Kleene3::False;
    }
    case Pred::Kind::Not:
      return weak_not(eval_pred(*p.p, s));
    case Pred::Kind::And:
      return weak_and(eval_pred(*p.p, s), eval_pred(*p.q, s));
    case Pred::Kind::Or:
      return weak_or(eval_pred(*p.p, s), eval_pred(*p.q, s));
  }
  throw Error("eval_pred: unreachable");
}

std::optional<State> run_operational(const StmtPtr& program,
                                     const StateSpace& space, State s) {
  switch (program->kind) {
    case Stmt::Kind::Skip:
      return s;
    case Stmt::Kind::Assign: {
      auto v = eval_aexp(*program->expr, s);
      if (!v) return std::nullopt;
      auto bound = space.bound_of(program->target);
      if (!bound) {
        throw UnboundVariableError("variable '" + program->target +
                                   "' is not declared in this space");
      }
      if (*v < 0 || *v > *bound) return std::nullopt;
      s[program->target] = *v;
      return s;
    }
    case Stmt::Kind::Seq: {
      auto mid = run_operational(program->s1, space, std::move(s));
      if (!mid) return std::nullopt;
      return run_operational(program->s2, space, std::move(*mid));
    }
    case Stmt::Kind::If: {
      switch (eval_pred(*program->guard, s)) {
        case Kleene3::True:
          return run_operational(program->s1, space, std::move(s));
        case Kleene3::False:
          return run_operational(program->s2, space, std::move(s));
        case Kleene3::Undef:
          return std::nullopt;
      }
      return std::nullopt;
    }
    case Stmt::Kind::While: {
      std::set<State> seen_at_head;
      while (true) {
        if (!seen_at_head.insert(s).second) return std::nullopt;  // diverges
        switch (eval_pred(*program->guard, s)) {
          case Kleene3::False:
            return s;
          case Kleene3::Undef:
            return std::nullopt;
          case Kleene3::True:
            break;
        }
        auto next = run_operational(program->s1, space, std::move(s));
        if (!next) return std::nullopt;
        s = std::move(*next);
      }
    }
  }
  throw Error("run_operational: unreachable");
}

PMap denote_pred(const PredPtr& p, const StateSpace& space) {
  const FinObj& sigma = space.carrier();
  FinObj two = one_plus_one();
  std::string truth = tag_left(kUnitElement);
  std::string falsity = tag_right(kUnitElement);

  switch (p->kind) {
    case Pred::Kind::True:
    case Pred::Kind::False:
    case Pred::Kind::Undef:
    case Pred::Kind::Compare: {
      std::map<std::string, std::string> graph;
      for (const State& s : space.states()) {
        Kleene3 v = eval_pred(*p, s);
        if (v == Kleene3::True) graph.emplace(space.encode(s), truth);
        if (v == Kleene3::False) graph.emplace(space.encode(s), falsity);
      }
      return PMap(sigma, two, std::move(graph));
    }
    case Pred::Kind::Not:
      return dec_to_pred(neg(pred_to_dec(denote_pred(p->p, space))));
    case Pred::Kind::And:
      return dec_to_pred(conj(pred_to_dec(denote_pred(p->p, space)),
                              pred_to_dec(denote_pred(p->q, space))));
    case Pred::Kind::Or:
      return dec_to_pred(disj(pred_to_dec(denote_pred(p->p, space)),
                              pred_to_dec(denote_pred(p->q, space))));
  }
  throw Error("denote_pred: unreachable");
}

PMap denote(const StmtPtr& program, const StateSpace& space) {
  const FinObj& sigma = space.carrier();
  switch (program->kind) {
    case Stmt::Kind::Skip:
      return identity(sigma);
    case Stmt::Kind::Assign: {
      auto bound = space.bound_of(program->target);
      if (!bound) {
        throw UnboundVariableError("variable '" + program->target +
                                   "' is not declared in this space");
      }
      std::map<std::string, std::string> graph;
      for (const State& s : space.states()) {
        auto v = eval_aexp(*program->expr, s);
        if (!v || *v < 0 || *v > *bound) continue;
        State t = s;
        t[program->target] = *v;
        graph.emplace(space.encode(s), space.encode(t));
      }
      return PMap(sigma, sigma, std::move(graph));
    }
    case Stmt::Kind::Seq:
      return compose(denote(program->s2, space), denote(program->s1, space));
    case Stmt::Kind::If: {
      Decision branch = pred_to_dec(denote_pred(program->guard, space));
      return compose(copair(denote(program->s1, space),
                            denote(program->s2, space)),
                     branch.underlying());
    }
    case Stmt::Kind::While: {
      Decision branch = pred_to_dec(denote_pred(program->guard, space));
      PMap body = denote(program->s1, space);
      PMap w = zero_map(sigma, sigma);
      // Ascending iteration from the nowhere-defined map; the guard-true
      // branch runs the body and re-enters, the guard-false branch exits.
      long limit = space.state_count() + 2;
      for (long i = 0; i < limit; ++i) {
        PMap next = compose(copair(compose(w, body), identity(sigma)),
                            branch.underlying());
        if (next == w) return w;
        w = std::move(next);
      }
      throw Error("denote: loop iteration failed to stabilize");
    }
  }
  throw Error("denote: unreachable");
}

}  // namespace decidua::flowchart
