#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "decidua/errors.hpp"
#include "decidua/fin_obj.hpp"

namespace decidua::flowchart {

struct ParseError : Error {
  ParseError(const std::string& msg, int line, int col)
      : Error(msg + " at line " + std::to_string(line) + ", column " +
              std::to_string(col)),
        line(line),
        col(col) {}
  int line;
  int col;
};

struct UndeclaredVariableError : ParseError {
  using ParseError::ParseError;
};

struct BoundOverflowError : ParseError {
  using ParseError::ParseError;
};

struct StateCapExceededError : Error {
  using Error::Error;
};

inline constexpr long kDefaultStateCap = 4096;

// A state assigns an in-range value to every declared variable.
using State = std::map<std::string, long>;

/// The finite space of program states: an ordered list of variables, each
/// ranging over 0..bound inclusive. The carrier object enumerates all states
/// with the last declared variable varying fastest.
class StateSpace {
 public:
  explicit StateSpace(std::vector<std::pair<std::string, long>> vars,
                      long cap = kDefaultStateCap);

  const std::vector<std::pair<std::string, long>>& vars() const {
    return vars_;
  }
  long state_count() const { return state_count_; }
  std::optional<long> bound_of(const std::string& name) const;

  const FinObj& carrier() const { return carrier_; }
  std::string encode(const State& s) const;
  State decode(const std::string& elem) const;
  std::vector<State> states() const;

 private:
  std::vector<std::pair<std::string, long>> vars_;
  long state_count_;
  FinObj carrier_;
};

struct AExp;
using AExpPtr = std::shared_ptr<const AExp>;

struct AExp {
  enum class Kind { Literal, Variable, Add, Sub, Mul };
  Kind kind;
  long value = 0;      // Literal
  std::string name;    // Variable
  AExpPtr lhs, rhs;    // Add/Sub/Mul
};

AExpPtr aexp_literal(long value);
AExpPtr aexp_variable(std::string name);
AExpPtr aexp_binary(AExp::Kind kind, AExpPtr lhs, AExpPtr rhs);

struct Pred;
using PredPtr = std::shared_ptr<const Pred>;

struct Pred {
  enum class Kind { True, False, Undef, Compare, Not, And, Or };
  enum class CmpOp { Eq, Lt, Le };
  Kind kind;
  CmpOp op = CmpOp::Eq;  // Compare
  AExpPtr a, b;          // Compare
  PredPtr p, q;          // Not (p), And/Or (p, q)
};

PredPtr pred_const(Pred::Kind kind);  // True / False / Undef
PredPtr pred_compare(Pred::CmpOp op, AExpPtr a, AExpPtr b);
PredPtr pred_not(PredPtr p);
PredPtr pred_binary(Pred::Kind kind, PredPtr p, PredPtr q);

struct Stmt;
using StmtPtr = std::shared_ptr<const Stmt>;

struct Stmt {
  enum class Kind { Skip, Assign, Seq, If, While };
  Kind kind;
  std::string target;  // Assign
  AExpPtr expr;        // Assign
  StmtPtr s1, s2;      // Seq (s1; s2), If (then, else), While (body in s1)
  PredPtr guard;       // If / While
};

StmtPtr stmt_skip();
StmtPtr stmt_assign(std::string target, AExpPtr expr);
StmtPtr stmt_seq(StmtPtr first, StmtPtr second);
StmtPtr stmt_if(PredPtr guard, StmtPtr then_branch, StmtPtr else_branch);
StmtPtr stmt_while(PredPtr guard, StmtPtr body);

// A program is a statement over a declared state space.
struct Module {
  StateSpace space;
  StmtPtr body;
};

// Collects every conditional / loop node in the tree, outermost first.
void collect_ifs(const StmtPtr& s, std::vector<StmtPtr>& out);
void collect_whiles(const StmtPtr& s, std::vector<StmtPtr>& out);

}  // namespace decidua::flowchart
