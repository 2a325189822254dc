#ifndef QBOUND_CORE_EXPR_HPP
#define QBOUND_CORE_EXPR_HPP

#include <functional>
#include <memory>
#include <string>
#include <string_view>
#include <variant>

#include "errors.hpp"

namespace qbound {

/// Value/first-derivative pair propagated by forward-mode evaluation.
struct DualValue {
    double value = 0.0;
    double derivative = 0.0;
};

enum class UnaryOp { Negate, Exp, Ln, Sin, Cos, Abs, Sqrt };
enum class BinaryOp { Add, Sub, Mul, Div, Pow };

struct ExprNode;
using NodePtr = std::shared_ptr<const ExprNode>;

struct ExprNode {
    struct Constant {
        double value;
    };
    struct Variable {};
    struct Unary {
        UnaryOp op;
        NodePtr operand;
    };
    struct Binary {
        BinaryOp op;
        NodePtr lhs;
        NodePtr rhs;
    };
    std::variant<Constant, Variable, Unary, Binary> kind;
};

/// Immutable expression tree in one variable `x`.
///
/// Grammar:
///   expr   := term (('+'|'-') term)*
///   term   := factor (('*'|'/') factor)*
///   factor := unary ('^' factor)?          -- '^' right-associative
///   unary  := '-'? atom
///   atom   := number | 'x' | func '(' expr ')' | '(' expr ')'
///   func   := exp | ln | sin | cos | abs | sqrt
///
/// Evaluation is pure; an Expr may be shared freely across threads.
class Expr {
public:
    /// Parses `source`; throws SyntaxError with the offending position.
    static Expr parse(std::string_view source);

    /// Value at x. Throws DomainError outside the expression's domain.
    double value(double x) const;

    /// Value and exact forward-mode derivative at x.
    /// abs contributes derivative 0 at its kink.
    DualValue dual(double x) const;

    /// Text form that reparses to a structurally identical tree.
    std::string text() const;

    bool structurallyEqual(const Expr& other) const;

    const ExprNode& root() const { return *root_; }

private:
    explicit Expr(NodePtr root) : root_(std::move(root)) {}
    NodePtr root_;
};

using RealFn = std::function<double(double)>;

/// Callable wrappers; each copy shares the underlying tree.
RealFn exprValueFn(const Expr& e);
RealFn exprDerivativeFn(const Expr& e);

/// x^n by sequential multiplication for small |n|, squaring above that.
/// Handles negative bases; n == 0 yields 1 (including 0^0). Throws
/// DomainError for 0 raised to a negative power. Shared by expression
/// evaluation and the special-means formulas so both produce identical
/// powers.
double powInt(double x, long long n);

} // namespace qbound

#endif
