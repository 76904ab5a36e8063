#ifndef ORTHOIEQ_EXPRESSION_HPP
#define ORTHOIEQ_EXPRESSION_HPP

// Weight and kernel expressions in one variable x.
//
// Grammar ('^' is right-associative; unary minus binds to an atom):
//   expr   := term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := unary ('^' factor)?
//   unary  := '-'? atom
//   atom   := number | 'pi' | 'x' | ident '(' expr ')' | '(' expr ')'
//   ident  := exp | log | sqrt | sin | cos | gamma

#include "orthoieq/numeric.hpp"
#include "orthoieq/polynomial.hpp"

#include <memory>
#include <optional>
#include <string>
#include <string_view>

namespace orthoieq {

class Expression {
public:
    enum class Kind { Number, Pi, Variable, Negate, Add, Subtract, Multiply, Divide, Power, Call };
    enum class Function { Exp, Log, Sqrt, Sin, Cos, Gamma };

    static Expression number(Rational value);
    static Expression pi();
    static Expression variable();
    static Expression negate(Expression operand);
    static Expression binary(Kind kind, Expression lhs, Expression rhs);
    static Expression call(Function fn, Expression argument);

    Kind kind() const;
    /// Literal value; Number nodes only.
    const Rational& value() const;
    Function function() const;
    /// Operand of Negate / Call, or left operand of a binary node.
    const Expression& lhs() const;
    const Expression& rhs() const;

    bool depends_on_x() const;

    friend bool operator==(const Expression& a, const Expression& b);

private:
    struct Node;
    explicit Expression(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

    std::shared_ptr<const Node> node_;
};

const char* function_name(Expression::Function fn);

/// Throws ParseError (1-based offset) or UnknownIdentifierError.
Expression parse_expression(std::string_view text);

/// Parenthesized rendering that reparses to a structurally identical tree.
std::string print(const Expression& e);

/// Evaluation point carrying accurate distances to the interval ends, so
/// that subexpressions `x - alpha` and `beta - x` keep full relative
/// precision next to an endpoint.
struct EvalPoint {
    Real x;
    std::optional<Rational> alpha;
    std::optional<Real> from_alpha;
    std::optional<Rational> beta;
    std::optional<Real> to_beta;
};

Real evaluate(const Expression& e, const Real& x);
Real evaluate(const Expression& e, const EvalPoint& point);

/// Value of an x-free expression.
std::optional<Real> constant_value(const Expression& e);

/// Exact polynomial form when e is built only from rational literals, x,
/// + - *, division by nonzero constants, and nonnegative integer powers.
std::optional<Polynomial<Rational>> to_polynomial(const Expression& e);

}  // namespace orthoieq

#endif  // ORTHOIEQ_EXPRESSION_HPP
