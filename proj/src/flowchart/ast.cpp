#include "decidua/flowchart/ast.hpp"

#include <set>

namespace decidua::flowchart {

StateSpace::StateSpace(std::vector<std::pair<std::string, long>> vars,
                       long cap)
    : vars_(std::move(vars)), state_count_(1), carrier_(FinObj::empty()) {
  std::set<std::string> seen;
  for (const auto& [name, bound] : vars_) {
    if (!seen.insert(name).second) {
      throw InvariantError("variable '" + name + "' declared twice");
    }
    if (bound < 0) {
      throw InvariantError("variable '" + name + "' has a negative bound");
    }
    if (state_count_ > cap / (bound + 1)) {
      throw StateCapExceededError("state space exceeds the cap of " +
                                  std::to_string(cap) + " states");
    }
    state_count_ *= bound + 1;
  }

  std::vector<std::string> elems;
  elems.reserve(static_cast<std::size_t>(state_count_));
  for (const State& s : states()) elems.push_back(encode(s));
  carrier_ = FinObj::atom(std::move(elems));
}

std::optional<long> StateSpace::bound_of(const std::string& name) const {
  for (const auto& [n, b] : vars_) {
    if (n == name) return b;
  }
  return std::nullopt;
}

std::string StateSpace::encode(const State& s) const {
  std::string out = "{";
  bool first = true;
  for (const auto& [name, bound] : vars_) {
    auto it = s.find(name);
    if (it == s.end()) {
      throw InvariantError("state is missing variable '" + name + "'");
    }
    if (it->second < 0 || it->second > bound) {
      throw InvariantError("state value for '" + name + "' is out of range");
    }
    if (!first) out += ",";
    first = false;
    out += name + "=" + std::to_string(it->second);
  }
  return out + "}";
}

State StateSpace::decode(const std::string& elem) const {
  State s;
  if (elem.size() < 2 || elem.front() != '{' || elem.back() != '}') {
    throw InvariantError("malformed state element '" + elem + "'");
  }
  std::string inner = elem.substr(1, elem.size() - 2);
  std::size_t pos = 0;
  while (pos < inner.size()) {
    std::size_t comma = inner.find(',', pos);
    std::string piece = inner.substr(
        pos, comma == std::string::npos ? std::string::npos : comma - pos);
    std::size_t eq = piece.find('=');
    if (eq == std::string::npos) {
      throw InvariantError("malformed state element '" + elem + "'");
    }
    s[piece.substr(0, eq)] = std::stol(piece.substr(eq + 1));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (encode(s) != elem) {
    throw InvariantError("state element '" + elem +
                         "' does not belong to this space");
  }
  return s;
}

std::vector<State> StateSpace::states() const {
  std::vector<State> out;
  out.reserve(static_cast<std::size_t>(state_count_));
  State current;
  for (const auto& [name, bound] : vars_) {
    (void)bound;
    current[name] = 0;
  }
  while (true) {
    out.push_back(current);
    // Odometer step, last declared variable fastest.
    std::size_t i = vars_.size();
    bool carried = true;
    while (i > 0 && carried) {
      --i;
      long& v = current[vars_[i].first];
      if (v < vars_[i].second) {
        ++v;
        carried = false;
      } else {
        v = 0;
      }
    }
    if (carried) return out;
  }
}

AExpPtr aexp_literal(long value) {
  auto e = std::make_shared<AExp>();
  e->kind = AExp::Kind::Literal;
  e->value = value;
  return e;
}

AExpPtr aexp_variable(std::string name) {
  auto e = std::make_shared<AExp>();
  e->kind = AExp::Kind::Variable;
  e->name = std::move(name);
  return e;
}

AExpPtr aexp_binary(AExp::Kind kind, AExpPtr lhs, AExpPtr rhs) {
  auto e = std::make_shared<AExp>();
  e->kind = kind;
  e->lhs = std::move(lhs);
  e->rhs = std::move(rhs);
  return e;
}

PredPtr pred_const(Pred::Kind kind) {
  auto p = std::make_shared<Pred>();
  p->kind = kind;
  return p;
}

PredPtr pred_compare(Pred::CmpOp op, AExpPtr a, AExpPtr b) {
  auto p = std::make_shared<Pred>();
  p->kind = Pred::Kind::Compare;
  p->op = op;
  p->a = std::move(a);
  p->b = std::move(b);
  return p;
}

PredPtr pred_not(PredPtr inner) {
  auto p = std::make_shared<Pred>();
  p->kind = Pred::Kind::Not;
  p->p = std::move(inner);
  return p;
}

PredPtr pred_binary(Pred::Kind kind, PredPtr lhs, PredPtr rhs) {
  auto p = std::make_shared<Pred>();
  p->kind = kind;
  p->p = std::move(lhs);
  p->q = std::move(rhs);
  return p;
}

StmtPtr stmt_skip() {
  auto s = std::make_shared<Stmt>();
  s->kind = Stmt::Kind::Skip;
  return s;
}

StmtPtr stmt_assign(std::string target, AExpPtr expr) {
  auto s = std::make_shared<Stmt>();
  s->kind = Stmt::Kind::Assign;
  s->target = std::move(target);
  s->expr = std::move(expr);
  return s;
}

StmtPtr stmt_seq(StmtPtr first, StmtPtr second) {
  auto s = std::make_shared<Stmt>();
  s->kind = Stmt::Kind::Seq;
  s->s1 = std::move(first);
  s->s2 = std::move(second);
  return s;
}

StmtPtr stmt_if(PredPtr guard, StmtPtr then_branch, StmtPtr else_branch) {
  auto s = std::make_shared<Stmt>();
  s->kind = Stmt::Kind::If;
  s->guard = std::move(guard);
  s->s1 = std::move(then_branch);
  s->s2 = std::move(else_branch);
  return s;
}

StmtPtr stmt_while(PredPtr guard, StmtPtr body) {
  auto s = std::make_shared<Stmt>();
  s->kind = Stmt::Kind::While;
  s->guard = std::move(guard);
  s->s1 = std::move(body);
  return s;
}

void collect_ifs(const StmtPtr& s, std::vector<StmtPtr>& out) {
  if (!s) return;
  if (s->kind == Stmt::Kind::If) out.push_back(s);
  collect_ifs(s->s1, out);
  collect_ifs(s->s2, out);
}

void collect_whiles(const StmtPtr& s, std::vector<StmtPtr>& out) {
  if (!s) return;
  if (s->kind == Stmt::Kind::While) out.push_back(s);
  collect_whiles(s->s1, out);
  collect_whiles(s->s2, out);
}

}  // namespace decidua::flowchart
