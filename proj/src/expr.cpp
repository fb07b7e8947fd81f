#include "dyngal/expr.hpp"

namespace dyngal::expr {

namespace {

struct Parser {
  const std::string& src;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < src.size() && (src[pos] == ' ' || src[pos] == '\t' || src[pos] == '\n'))
      ++pos;
  }

  char peek() {
    skip_ws();
    return pos < src.size() ? src[pos] : '\0';
  }

  bool accept(char c) {
    if (peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }

  long long parse_uint() {
    skip_ws();
    if (pos >= src.size() || !isdigit(static_cast<unsigned char>(src[pos])))
      throw ParseError("expected an unsigned integer", pos);
    long long v = 0;
    while (pos < src.size() && isdigit(static_cast<unsigned char>(src[pos]))) {
      v = v * 10 + (src[pos] - '0');
      if (v > (1LL << 40)) throw ParseError("integer literal too large", pos);
      ++pos;
    }
    return v;
  }

  std::unique_ptr<Expr> parse_expr() {
    auto node = parse_term();
    while (true) {
      if (accept('+')) {
        auto rhs = parse_term();
        auto add = std::make_unique<Expr>(Expr::Kind::Add);
        add->lhs = std::move(node);
        add->rhs = std::move(rhs);
        node = std::move(add);
      } else if (accept('-')) {
        auto rhs = parse_term();
        auto sub = std::make_unique<Expr>(Expr::Kind::Sub);
        sub->lhs = std::move(node);
        sub->rhs = std::move(rhs);
        node = std::move(sub);
      } else {
        return node;
      }
    }
  }

  std::unique_ptr<Expr> parse_term() {
    auto node = parse_factor();
    while (true) {
      if (accept('*')) {
        auto rhs = parse_factor();
        auto mul = std::make_unique<Expr>(Expr::Kind::Mul);
        mul->lhs = std::move(node);
        mul->rhs = std::move(rhs);
        node = std::move(mul);
      } else if (accept('/')) {
        auto rhs = parse_factor();
        auto div = std::make_unique<Expr>(Expr::Kind::Div);
        div->lhs = std::move(node);
        div->rhs = std::move(rhs);
        node = std::move(div);
      } else {
        return node;
      }
    }
  }

  std::unique_ptr<Expr> parse_factor() {
    auto base = parse_base();
    if (accept('^')) {
      auto pw = std::make_unique<Expr>(Expr::Kind::Pow);
      pw->lhs = std::move(base);
      pw->value = parse_uint();
      return pw;
    }
    return base;
  }

  std::unique_ptr<Expr> parse_base() {
    char c = peek();
    if (c == 't') {
      ++pos;
      return std::make_unique<Expr>(Expr::Kind::VarT);
    }
    if (c == 'g') {
      ++pos;
      return std::make_unique<Expr>(Expr::Kind::Gen);
    }
    if (isdigit(static_cast<unsigned char>(c))) {
      auto lit = std::make_unique<Expr>(Expr::Kind::IntLit);
      lit->value = parse_uint();
      return lit;
    }
    if (c == '(') {
      ++pos;
      auto inner = parse_expr();
      if (!accept(')')) throw ParseError("expected ')'", pos);
      return inner;
    }
    throw ParseError("expected 't', 'g', an integer or '('", pos);
  }
};

}  // namespace

std::unique_ptr<Expr> parse(const std::string& src) {
  Parser p{src};
  auto e = p.parse_expr();
  p.skip_ws();
  if (p.pos != src.size()) throw ParseError("unexpected trailing input", p.pos);
  return e;
}

std::string print(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::VarT: return "t";
    case Expr::Kind::Gen: return "g";
    case Expr::Kind::IntLit: return std::to_string(e.value);
    case Expr::Kind::Pow: return print(*e.lhs) + "^" + std::to_string(e.value);
    case Expr::Kind::Add: return "(" + print(*e.lhs) + " + " + print(*e.rhs) + ")";
    case Expr::Kind::Sub: return "(" + print(*e.lhs) + " - " + print(*e.rhs) + ")";
    case Expr::Kind::Mul: return "(" + print(*e.lhs) + "*" + print(*e.rhs) + ")";
    case Expr::Kind::Div: return "(" + print(*e.lhs) + "/" + print(*e.rhs) + ")";
  }
  return "";
}

ff::RatFunc evaluate(const gf::Field& k, const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::VarT: return ff::rf_t(k);
    case Expr::Kind::Gen:
      if (k.r() == 1)
        throw std::domain_error("expr: 'g' is undefined over a prime field");
      return ff::rf_constant(k, k.gen());
    case Expr::Kind::IntLit: return ff::rf_constant(k, k.from_int(e.value));
    case Expr::Kind::Pow: return ff::pow(k, evaluate(k, *e.lhs), e.value);
    case Expr::Kind::Add: return ff::add(k, evaluate(k, *e.lhs), evaluate(k, *e.rhs));
    case Expr::Kind::Sub: return ff::sub(k, evaluate(k, *e.lhs), evaluate(k, *e.rhs));
    case Expr::Kind::Mul: return ff::mul(k, evaluate(k, *e.lhs), evaluate(k, *e.rhs));
    case Expr::Kind::Div: {
      auto den = evaluate(k, *e.rhs);
      if (den.is_zero()) throw std::domain_error("expr: division by zero");
      return ff::div(k, evaluate(k, *e.lhs), den);
    }
  }
  throw std::logic_error("expr: unreachable");
}

ff::RatFunc eval_string(const gf::Field& k, const std::string& src) {
  return evaluate(k, *parse(src));
}

}  // namespace dyngal::expr
