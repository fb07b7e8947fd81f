#ifndef DYNGAL_EXPR_HPP
#define DYNGAL_EXPR_HPP

#include <memory>
#include <stdexcept>
#include <string>

#include "dyngal/funcfield.hpp"

// Input expressions for rational functions in t: sums, differences, products,
// quotients, nonnegative integer powers, the variable t, the field generator
// g and integer literals (reduced mod p).

namespace dyngal::expr {

struct Expr {
  enum class Kind { Add, Sub, Mul, Div, Pow, VarT, Gen, IntLit };
  Kind kind;
  std::unique_ptr<Expr> lhs, rhs;  // Pow uses lhs and exponent
  long long value = 0;             // IntLit value or Pow exponent

  Expr(Kind kk) : kind(kk) {}
};

struct ParseError : std::runtime_error {
  std::size_t offset;
  ParseError(const std::string& msg, std::size_t off)
      : std::runtime_error(msg), offset(off) {}
};

/// Grammar: expr := term (('+'|'-') term)*; term := factor (('*'|'/') factor)*;
/// factor := base ('^' uint)?; base := 't' | 'g' | uint | '(' expr ')'.
/// Whitespace is insignificant. Throws ParseError with the offending offset.
std::unique_ptr<Expr> parse(const std::string& src);

/// Canonical printing; parse(print(e)) reproduces e structurally.
std::string print(const Expr& e);

/// Evaluation over F_q(t). Division by an expression evaluating to zero and
/// `g` over a prime field are domain errors.
ff::RatFunc evaluate(const gf::Field& k, const Expr& e);

/// Convenience: parse then evaluate.
ff::RatFunc eval_string(const gf::Field& k, const std::string& src);

}  // namespace dyngal::expr

#endif
