#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>

#include "hadafrac/real_function.hpp"

namespace hadafrac {

enum class ExprKind {
  Constant,
  Variable,
  Neg,
  Ln,
  Exp,
  Sqrt,
  Abs,
  Sin,
  Cos,
  Add,
  Sub,
  Mul,
  Div,
  Pow,
};

/// Immutable expression tree over one variable, written `x` in source text.
///
/// Grammar (whitespace insignificant):
///   expr   := term (("+"|"-") term)*
///   term   := factor (("*"|"/") factor)*
///   factor := ("-")? power
///   power  := atom ("^" factor)?
///   atom   := NUMBER | "x" | "pi" | "e" | IDENT "(" expr ")" | "(" expr ")"
///   IDENT  := "ln" | "exp" | "sqrt" | "abs" | "sin" | "cos"
class ExprAst {
 public:
  static ExprAst constant(double value);
  static ExprAst variable();
  static ExprAst unary(ExprKind kind, ExprAst operand);
  static ExprAst binary(ExprKind kind, ExprAst lhs, ExprAst rhs);

  ExprKind kind() const noexcept;
  /// Only meaningful for constants.
  double value() const noexcept;
  const ExprAst& lhs() const;
  const ExprAst& rhs() const;
  std::size_t depth() const noexcept;

  friend bool operator==(const ExprAst& a, const ExprAst& b);

 private:
  struct Node;
  explicit ExprAst(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

inline constexpr std::size_t kMaxExpressionBytes = 64 * 1024;

/// Throws ParseError with the byte offset and the set of tokens that would have been accepted.
ExprAst parse_expr(std::string_view text);

/// Fully parenthesised text. Trees produced by parse_expr reparse to an equal tree; a
/// hand-built negative constant is written "(-c)" and reparses as a negation of c.
std::string serialize(const ExprAst& ast);

/// Evaluates at tau >= 1. Domain faults (ln or sqrt out of domain, division by zero,
/// 0 to a negative power, nonfinite intermediate) throw EvaluationError naming the
/// offending subexpression.
double eval_expr(const ExprAst& ast, double tau);

RealFunction to_function(ExprAst ast);
RealFunction parse_function(std::string_view text);

}  // namespace hadafrac
