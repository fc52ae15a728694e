#pragma once

#include <memory>
#include <string>

#include "invoser/rational.hpp"
#include "invoser/series.hpp"

namespace invoser {

// AST for closed-form series descriptions like "exp(sin(x))-1".
struct ExprNode {
    enum class Op { Const, Var, Add, Sub, Mul, Div, Pow, Apply };
    enum class Func { Exp, Sin, Cos, Log };

    Op op = Op::Const;
    Rational value;              // Const
    int exponent = 0;            // Pow
    Func func = Func::Exp;       // Apply
    std::shared_ptr<const ExprNode> lhs, rhs;
};

using ExprPtr = std::shared_ptr<const ExprNode>;

// Recursive-descent parser for
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := atom ('^' uint)?
//   atom   := uint | 'x' | '(' expr ')' | func '(' expr ')'
// with func in {exp, sin, cos, log}. Whitespace is ignored; '/' is the binary
// operator and constant subtrees fold, so "3/2" becomes the literal 3/2. A
// leading '-' is sugar for subtraction from zero. Throws SyntaxError with the
// byte offset of the offending character.
ExprPtr parse_expression(const std::string& text);

// Canonical rendering; reparses to an identical AST.
std::string format_expression(const ExprNode& e);

// Expands the expression as a truncated series in the exponential convention.
// Division needs a unit denominator (nonzero constant term); exp/sin/cos need
// arguments vanishing at 0 and log needs constant term exactly 1.
Series eval_series(const ExprNode& e, int order);
Series eval_series(const std::string& text, int order);

}  // namespace invoser
