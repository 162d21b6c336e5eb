#include "decidua/flowchart/parser.hpp"

#include <cctype>
#include <set>
#include <string>
#include <vector>

namespace decidua::flowchart {

namespace {

constexpr long kMaxLiteral = 1000000000;

enum class Tok {
  Ident,
  Int,
  KwVar,
  KwIn,
  KwSkip,
  KwIf,
  KwThen,
  KwElse,
  KwFi,
  KwWhile,
  KwDo,
  KwOd,
  KwNot,
  KwAnd,
  KwOr,
  KwTrue,
  KwFalse,
  KwUndef,
  Assign,   // :=
  Semi,     // ;
  DotDot,   // ..
  Eq,       // =
  Lt,       // <
  Le,       // <=
  Plus,
  Minus,
  Star,
  LParen,
  RParen,
  End,
};

struct Token {
  Tok kind;
  std::string text;
  long value = 0;
  int line = 1;
  int col = 1;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (true) {
      skip_blank();
      if (pos_ >= src_.size()) {
        out.push_back({Tok::End, "", 0, line_, col_});
        return out;
      }
      out.push_back(next());
    }
  }

 private:
  void skip_blank() {
    while (pos_ < src_.size()) {
      char c = src_[pos_];
      if (c == '#') {
        while (pos_ < src_.size() && src_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        break;
      }
    }
  }

  void advance() {
    if (src_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  Token next() {
    int line = line_, col = col_;
    char c = src_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      long v = 0;
      std::string text;
      while (pos_ < src_.size() &&
             std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
        v = v * 10 + (src_[pos_] - '0');
        if (v > kMaxLiteral) {
          throw BoundOverflowError("integer literal too large", line, col);
        }
        text += src_[pos_];
        advance();
      }
      return {Tok::Int, text, v, line, col};
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string text;
      while (pos_ < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[pos_])) ||
              src_[pos_] == '_')) {
        text += src_[pos_];
        advance();
      }
      static const std::map<std::string, Tok> keywords = {
          {"var", Tok::KwVar},     {"in", Tok::KwIn},     {"skip", Tok::KwSkip},
          {"if", Tok::KwIf},       {"then", Tok::KwThen}, {"else", Tok::KwElse},
          {"fi", Tok::KwFi},       {"while", Tok::KwWhile}, {"do", Tok::KwDo},
          {"od", Tok::KwOd},       {"not", Tok::KwNot},   {"and", Tok::KwAnd},
          {"or", Tok::KwOr},       {"true", Tok::KwTrue}, {"false", Tok::KwFalse},
          {"undef", Tok::KwUndef},
      };
      auto it = keywords.find(text);
      return {it == keywords.end() ? Tok::Ident : it->second, text, 0, line,
              col};
    }
    auto two = [&](char a, char b) {
      return c == a && pos_ + 1 < src_.size() && src_[pos_ + 1] == b;
    };
    if (two(':', '=')) {
      advance();
      advance();
      return {Tok::Assign, ":=", 0, line, col};
    }
    if (two('.', '.')) {
      advance();
      advance();
      return {Tok::DotDot, "..", 0, line, col};
    }
    if (two('<', '=')) {
      advance();
      advance();
      return {Tok::Le, "<=", 0, line, col};
    }
    advance();
    switch (c) {
      case ';':
        return {Tok::Semi, ";", 0, line, col};
      case '=':
        return {Tok::Eq, "=", 0, line, col};
      case '<':
        return {Tok::Lt, "<", 0, line, col};
      case '+':
        return {Tok::Plus, "+", 0, line, col};
      case '-':
        return {Tok::Minus, "-", 0, line, col};
      case '*':
        return {Tok::Star, "*", 0, line, col};
      case '(':
        return {Tok::LParen, "(", 0, line, col};
      case ')':
        return {Tok::RParen, ")", 0, line, col};
      default:
        throw ParseError(std::string("unexpected character '") + c + "'", line,
                         col);
    }
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

class Parser {
 public:
  Parser(std::vector<Token> tokens, long state_cap)
      : tokens_(std::move(tokens)), state_cap_(state_cap) {}

  Module run() {
    std::vector<std::pair<std::string, long>> vars;
    while (peek().kind == Tok::KwVar) vars.push_back(parse_decl());
    StmtPtr body = parse_stmt();
    expect(Tok::End, "end of input");
    try {
      return Module{StateSpace(std::move(vars), state_cap_), std::move(body)};
    } catch (const StateCapExceededError& e) {
      throw BoundOverflowError(e.what(), 1, 1);
    }
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    std::size_t i = pos_ + ahead;
    return i < tokens_.size() ? tokens_[i] : tokens_.back();
  }

  Token take() { return tokens_[pos_ < tokens_.size() - 1 ? pos_++ : pos_]; }

  bool accept(Tok kind) {
    if (peek().kind == kind) {
      take();
      return true;
    }
    return false;
  }

  Token expect(Tok kind, const char* what) {
    if (peek().kind != kind) {
      throw ParseError(std::string("expected ") + what + ", found '" +
                           (peek().kind == Tok::End ? "end of input"
                                                    : peek().text) +
                           "'",
                       peek().line, peek().col);
    }
    return take();
  }

  std::pair<std::string, long> parse_decl() {
    expect(Tok::KwVar, "'var'");
    Token name = expect(Tok::Ident, "variable name");
    if (declared_.count(name.text)) {
      throw ParseError("variable '" + name.text + "' declared twice",
                       name.line, name.col);
    }
    declared_.insert(name.text);
    expect(Tok::KwIn, "'in'");
    Token lo = expect(Tok::Int, "lower bound");
    if (lo.value != 0) {
      throw ParseError("lower bound must be 0", lo.line, lo.col);
    }
    expect(Tok::DotDot, "'..'");
    Token hi = expect(Tok::Int, "upper bound");
    expect(Tok::Semi, "';' after declaration");
    return {name.text, hi.value};
  }

  StmtPtr parse_stmt() {
    StmtPtr s = parse_stmt_primary();
    while (accept(Tok::Semi)) {
      s = stmt_seq(std::move(s), parse_stmt_primary());
    }
    return s;
  }

  StmtPtr parse_stmt_primary() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::KwSkip:
        take();
        return stmt_skip();
      case Tok::Ident: {
        Token name = take();
        check_declared(name);
        expect(Tok::Assign, "':='");
        return stmt_assign(name.text, parse_aexp());
      }
      case Tok::KwIf: {
        take();
        PredPtr guard = parse_pred();
        expect(Tok::KwThen, "'then'");
        StmtPtr then_branch = parse_stmt();
        expect(Tok::KwElse, "'else'");
        StmtPtr else_branch = parse_stmt();
        expect(Tok::KwFi, "'fi'");
        return stmt_if(std::move(guard), std::move(then_branch),
                       std::move(else_branch));
      }
      case Tok::KwWhile: {
        take();
        PredPtr guard = parse_pred();
        expect(Tok::KwDo, "'do'");
        StmtPtr body = parse_stmt();
        expect(Tok::KwOd, "'od'");
        return stmt_while(std::move(guard), std::move(body));
      }
      case Tok::LParen: {
        take();
        StmtPtr s = parse_stmt();
        expect(Tok::RParen, "')'");
        return s;
      }
      default:
        throw ParseError("expected a statement, found '" +
                             (t.kind == Tok::End ? "end of input" : t.text) +
                             "'",
                         t.line, t.col);
    }
  }

  PredPtr parse_pred() { return parse_pred_or(); }

  PredPtr parse_pred_or() {
    PredPtr p = parse_pred_and();
    while (accept(Tok::KwOr)) {
      p = pred_binary(Pred::Kind::Or, std::move(p), parse_pred_and());
    }
    return p;
  }

  PredPtr parse_pred_and() {
    PredPtr p = parse_pred_not();
    while (accept(Tok::KwAnd)) {
      p = pred_binary(Pred::Kind::And, std::move(p), parse_pred_not());
    }
    return p;
  }

  PredPtr parse_pred_not() {
    if (accept(Tok::KwNot)) return pred_not(parse_pred_not());
    return parse_pred_atom();
  }

  PredPtr parse_pred_atom() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::KwTrue:
        take();
        return pred_const(Pred::Kind::True);
      case Tok::KwFalse:
        take();
        return pred_const(Pred::Kind::False);
      case Tok::KwUndef:
        take();
        return pred_const(Pred::Kind::Undef);
      case Tok::LParen: {
        // '(' may open a parenthesized predicate or the left operand of a
        // comparison; try the predicate reading first and back off.
        std::size_t mark = pos_;
        take();
        try {
          PredPtr inner = parse_pred();
          expect(Tok::RParen, "')'");
          return inner;
        } catch (const ParseError&) {
          pos_ = mark;
          return parse_compare();
        }
      }
      default:
        return parse_compare();
    }
  }

  PredPtr parse_compare() {
    AExpPtr lhs = parse_aexp();
    const Token& t = peek();
    Pred::CmpOp op;
    switch (t.kind) {
      case Tok::Eq:
        op = Pred::CmpOp::Eq;
        break;
      case Tok::Lt:
        op = Pred::CmpOp::Lt;
        break;
      case Tok::Le:
        op = Pred::CmpOp::Le;
        break;
      default:
        throw ParseError("expected a comparison operator, found '" +
                             (t.kind == Tok::End ? "end of input" : t.text) +
                             "'",
                         t.line, t.col);
    }
    take();
    return pred_compare(op, std::move(lhs), parse_aexp());
  }

  AExpPtr parse_aexp() {
    AExpPtr e = parse_term();
    while (true) {
      if (accept(Tok::Plus)) {
        e = aexp_binary(AExp::Kind::Add, std::move(e), parse_term());
      } else if (accept(Tok::Minus)) {
        e = aexp_binary(AExp::Kind::Sub, std::move(e), parse_term());
      } else {
        return e;
      }
    }
  }

  AExpPtr parse_term() {
    AExpPtr e = parse_factor();
    while (accept(Tok::Star)) {
      e = aexp_binary(AExp::Kind::Mul, std::move(e), parse_factor());
    }
    return e;
  }

  AExpPtr parse_factor() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Int:
        return aexp_literal(take().value);
      case Tok::Ident: {
        Token name = take();
        check_declared(name);
        return aexp_variable(name.text);
      }
      case Tok::LParen: {
        take();
        AExpPtr e = parse_aexp();
        expect(Tok::RParen, "')'");
        return e;
      }
      default:
        throw ParseError("expected an expression, found '" +
                             (t.kind == Tok::End ? "end of input" : t.text) +
                             "'",
                         t.line, t.col);
    }
  }

  void check_declared(const Token& name) const {
    if (!declared_.count(name.text)) {
      throw UndeclaredVariableError("undeclared variable '" + name.text + "'",
                                    name.line, name.col);
    }
  }

  std::vector<Token> tokens_;
  long state_cap_;
  std::size_t pos_ = 0;
  std::set<std::string> declared_;
};

}  // namespace

Module parse_program(std::string_view source, long state_cap) {
  return Parser(Lexer(source).run(), state_cap).run();
}

}  // namespace decidua::flowchart
