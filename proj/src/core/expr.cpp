#include "expr.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <sstream>

namespace qbound {
namespace {

// ---------------------------------------------------------------------------
// dual arithmetic

DualValue makeDual(double v, double d) { return DualValue{v, d}; }

DualValue dualAdd(DualValue a, DualValue b) { return makeDual(a.value + b.value, a.derivative + b.derivative); }
DualValue dualSub(DualValue a, DualValue b) { return makeDual(a.value - b.value, a.derivative - b.derivative); }
DualValue dualMul(DualValue a, DualValue b) {
    return makeDual(a.value * b.value, a.derivative * b.value + a.value * b.derivative);
}

DualValue dualDiv(DualValue a, DualValue b) {
    if (b.value == 0.0)
        throw DomainError("division by zero");
    double v = a.value / b.value;
    return makeDual(v, (a.derivative - v * b.derivative) / b.value);
}

bool isIntegral(double v) { return std::isfinite(v) && v == std::floor(v); }

} // namespace

double powInt(double x, long long n) {
    bool invert = n < 0;
    unsigned long long k = invert ? static_cast<unsigned long long>(-(n + 1)) + 1ULL
                                  : static_cast<unsigned long long>(n);
    double r = 1.0;
    if (k <= 32) {
        for (unsigned long long i = 0; i < k; ++i)
            r *= x;
    } else {
        double base = x;
        while (k > 0) {
            if (k & 1ULL)
                r *= base;
            base *= base;
            k >>= 1;
        }
    }
    if (invert) {
        if (r == 0.0)
            throw DomainError("zero raised to a negative power");
        r = 1.0 / r;
    }
    return r;
}

namespace {

DualValue dualPow(DualValue base, DualValue exponent) {
    // A constant integral exponent keeps negative bases in the domain.
    if (exponent.derivative == 0.0 && isIntegral(exponent.value)) {
        long long n = static_cast<long long>(exponent.value);
        double v = powInt(base.value, n);
        double d = 0.0;
        if (base.derivative != 0.0 && n != 0)
            d = static_cast<double>(n) * powInt(base.value, n - 1) * base.derivative;
        return makeDual(v, d);
    }
    if (base.value <= 0.0)
        throw DomainError("non-integer exponent requires a positive base");
    double v = std::pow(base.value, exponent.value);
    double d = v * (exponent.derivative * std::log(base.value) +
                    exponent.value * base.derivative / base.value);
    return makeDual(v, d);
}

DualValue dualUnary(UnaryOp op, DualValue u) {
    switch (op) {
    case UnaryOp::Negate:
        return makeDual(-u.value, -u.derivative);
    case UnaryOp::Exp: {
        double v = std::exp(u.value);
        return makeDual(v, v * u.derivative);
    }
    case UnaryOp::Ln:
        if (u.value <= 0.0)
            throw DomainError("ln of a non-positive value");
        return makeDual(std::log(u.value), u.derivative / u.value);
    case UnaryOp::Sin:
        return makeDual(std::sin(u.value), std::cos(u.value) * u.derivative);
    case UnaryOp::Cos:
        return makeDual(std::cos(u.value), -std::sin(u.value) * u.derivative);
    case UnaryOp::Abs:
        if (u.value > 0.0)
            return u;
        if (u.value < 0.0)
            return makeDual(-u.value, -u.derivative);
        return makeDual(0.0, 0.0); // abs'(0) := 0
    case UnaryOp::Sqrt: {
        if (u.value < 0.0)
            throw DomainError("sqrt of a negative value");
        double v = std::sqrt(u.value);
        double d = u.derivative == 0.0 ? 0.0 : 0.5 * u.derivative / v;
        return makeDual(v, d);
    }
    }
    throw std::logic_error("unhandled unary op");
}

DualValue evalDual(const ExprNode& node, double x) {
    struct Visitor {
        double x;
        DualValue operator()(const ExprNode::Constant& c) const { return makeDual(c.value, 0.0); }
        DualValue operator()(const ExprNode::Variable&) const { return makeDual(x, 1.0); }
        DualValue operator()(const ExprNode::Unary& u) const {
            return dualUnary(u.op, evalDual(*u.operand, x));
        }
        DualValue operator()(const ExprNode::Binary& b) const {
            DualValue l = evalDual(*b.lhs, x);
            DualValue r = evalDual(*b.rhs, x);
            switch (b.op) {
            case BinaryOp::Add: return dualAdd(l, r);
            case BinaryOp::Sub: return dualSub(l, r);
            case BinaryOp::Mul: return dualMul(l, r);
            case BinaryOp::Div: return dualDiv(l, r);
            case BinaryOp::Pow: return dualPow(l, r);
            }
            throw std::logic_error("unhandled binary op");
        }
    };
    return std::visit(Visitor{x}, node.kind);
}

// Plain-value evaluation shares the dual path; the derivative channel of the
// variable is simply seeded with 0 so pow/abs take identical branches.
double evalValue(const ExprNode& node, double x) {
    struct Visitor {
        double x;
        double operator()(const ExprNode::Constant& c) const { return c.value; }
        double operator()(const ExprNode::Variable&) const { return x; }
        double operator()(const ExprNode::Unary& u) const {
            return dualUnary(u.op, makeDual(evalValue(*u.operand, x), 0.0)).value;
        }
        double operator()(const ExprNode::Binary& b) const {
            DualValue l = makeDual(evalValue(*b.lhs, x), 0.0);
            DualValue r = makeDual(evalValue(*b.rhs, x), 0.0);
            switch (b.op) {
            case BinaryOp::Add: return l.value + r.value;
            case BinaryOp::Sub: return l.value - r.value;
            case BinaryOp::Mul: return l.value * r.value;
            case BinaryOp::Div: return dualDiv(l, r).value;
            case BinaryOp::Pow: return dualPow(l, r).value;
            }
            throw std::logic_error("unhandled binary op");
        }
    };
    return std::visit(Visitor{x}, node.kind);
}

// ---------------------------------------------------------------------------
// parser

class Parser {
public:
    explicit Parser(std::string_view src) : src_(src) {}

    NodePtr run() {
        if (src_.empty())
            fail("empty expression", 0);
        NodePtr e = parseExpr();
        skipSpace();
        if (pos_ != src_.size())
            fail("unexpected trailing input", pos_);
        return e;
    }

private:
    std::string_view src_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& what, std::size_t at) const {
        std::ostringstream os;
        os << what << " at position " << at;
        throw SyntaxError(os.str(), at);
    }

    void skipSpace() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_])))
            ++pos_;
    }

    bool consume(char c) {
        skipSpace();
        if (pos_ < src_.size() && src_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skipSpace();
        return pos_ < src_.size() ? src_[pos_] : '\0';
    }

    NodePtr parseExpr() {
        NodePtr lhs = parseTerm();
        for (;;) {
            if (consume('+'))
                lhs = makeBinary(BinaryOp::Add, lhs, parseTerm());
            else if (consume('-'))
                lhs = makeBinary(BinaryOp::Sub, lhs, parseTerm());
            else
                return lhs;
        }
    }

    NodePtr parseTerm() {
        NodePtr lhs = parseFactor();
        for (;;) {
            if (consume('*'))
                lhs = makeBinary(BinaryOp::Mul, lhs, parseFactor());
            else if (consume('/'))
                lhs = makeBinary(BinaryOp::Div, lhs, parseFactor());
            else
                return lhs;
        }
    }

    NodePtr parseFactor() {
        NodePtr base = parseUnary();
        if (consume('^'))
            return makeBinary(BinaryOp::Pow, base, parseFactor());
        return base;
    }

    NodePtr parseUnary() {
        if (consume('-'))
            return makeUnary(UnaryOp::Negate, parseAtom());
        return parseAtom();
    }

    NodePtr parseAtom() {
        skipSpace();
        if (pos_ >= src_.size())
            fail("unexpected end of input", pos_);
        char c = src_[pos_];
        if (c == '(') {
            std::size_t open = pos_;
            ++pos_;
            NodePtr inner = parseExpr();
            if (!consume(')'))
                fail("unbalanced parenthesis opened", open);
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.')
            return parseNumber();
        if (std::isalpha(static_cast<unsigned char>(c)))
            return parseIdentifier();
        fail("unexpected character", pos_);
    }

    NodePtr parseNumber() {
        std::size_t start = pos_;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_])))
            ++pos_;
        if (pos_ < src_.size() && src_[pos_] == '.') {
            ++pos_;
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_])))
                ++pos_;
        }
        if (pos_ < src_.size() && (src_[pos_] == 'e' || src_[pos_] == 'E')) {
            std::size_t mark = pos_;
            ++pos_;
            if (pos_ < src_.size() && (src_[pos_] == '+' || src_[pos_] == '-'))
                ++pos_;
            if (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
                while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_])))
                    ++pos_;
            } else {
                pos_ = mark; // 'e' belonged to something else; not part of the number
            }
        }
        std::string token(src_.substr(start, pos_ - start));
        if (token == ".")
            fail("malformed number", start);
        char* end = nullptr;
        double v = std::strtod(token.c_str(), &end);
        if (end != token.c_str() + token.size())
            fail("malformed number", start);
        return std::make_shared<const ExprNode>(ExprNode{ExprNode::Constant{v}});
    }

    NodePtr parseIdentifier() {
        std::size_t start = pos_;
        while (pos_ < src_.size() && std::isalpha(static_cast<unsigned char>(src_[pos_])))
            ++pos_;
        std::string_view name = src_.substr(start, pos_ - start);
        if (name == "x")
            return std::make_shared<const ExprNode>(ExprNode{ExprNode::Variable{}});
        UnaryOp op;
        if (name == "exp") op = UnaryOp::Exp;
        else if (name == "ln") op = UnaryOp::Ln;
        else if (name == "sin") op = UnaryOp::Sin;
        else if (name == "cos") op = UnaryOp::Cos;
        else if (name == "abs") op = UnaryOp::Abs;
        else if (name == "sqrt") op = UnaryOp::Sqrt;
        else fail("unknown identifier '" + std::string(name) + "'", start);
        if (!consume('('))
            fail("expected '(' after function name", pos_);
        NodePtr arg = parseExpr();
        if (!consume(')'))
            fail("unbalanced parenthesis in function call", pos_);
        return makeUnary(op, arg);
    }

    static NodePtr makeUnary(UnaryOp op, NodePtr operand) {
        return std::make_shared<const ExprNode>(ExprNode{ExprNode::Unary{op, std::move(operand)}});
    }
    static NodePtr makeBinary(BinaryOp op, NodePtr lhs, NodePtr rhs) {
        return std::make_shared<const ExprNode>(
            ExprNode{ExprNode::Binary{op, std::move(lhs), std::move(rhs)}});
    }
};

// ---------------------------------------------------------------------------
// printing

const char* functionName(UnaryOp op) {
    switch (op) {
    case UnaryOp::Exp: return "exp";
    case UnaryOp::Ln: return "ln";
    case UnaryOp::Sin: return "sin";
    case UnaryOp::Cos: return "cos";
    case UnaryOp::Abs: return "abs";
    case UnaryOp::Sqrt: return "sqrt";
    case UnaryOp::Negate: break;
    }
    return "";
}

void printNumber(std::ostream& os, double v) {
    char buf[40];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
    os << std::string_view(buf, static_cast<std::size_t>(end - buf));
}

// Conservative parenthesization: every compound operand is wrapped, so the
// printed text reparses to the identical tree.
void printNode(std::ostream& os, const ExprNode& node) {
    struct Visitor {
        std::ostream& os;
        void operator()(const ExprNode::Constant& c) const { printNumber(os, c.value); }
        void operator()(const ExprNode::Variable&) const { os << 'x'; }
        void operator()(const ExprNode::Unary& u) const {
            if (u.op == UnaryOp::Negate) {
                os << "-(";
                printNode(os, *u.operand);
                os << ')';
            } else {
                os << functionName(u.op) << '(';
                printNode(os, *u.operand);
                os << ')';
            }
        }
        void operator()(const ExprNode::Binary& b) const {
            char sym = '?';
            switch (b.op) {
            case BinaryOp::Add: sym = '+'; break;
            case BinaryOp::Sub: sym = '-'; break;
            case BinaryOp::Mul: sym = '*'; break;
            case BinaryOp::Div: sym = '/'; break;
            case BinaryOp::Pow: sym = '^'; break;
            }
            os << '(';
            printNode(os, *b.lhs);
            os << ')' << sym << '(';
            printNode(os, *b.rhs);
            os << ')';
        }
    };
    std::visit(Visitor{os}, node.kind);
}

bool nodesEqual(const ExprNode& a, const ExprNode& b) {
    if (a.kind.index() != b.kind.index())
        return false;
    if (const auto* ca = std::get_if<ExprNode::Constant>(&a.kind))
        return ca->value == std::get<ExprNode::Constant>(b.kind).value;
    if (std::holds_alternative<ExprNode::Variable>(a.kind))
        return true;
    if (const auto* ua = std::get_if<ExprNode::Unary>(&a.kind)) {
        const auto& ub = std::get<ExprNode::Unary>(b.kind);
        return ua->op == ub.op && nodesEqual(*ua->operand, *ub.operand);
    }
    const auto& ba = std::get<ExprNode::Binary>(a.kind);
    const auto& bb = std::get<ExprNode::Binary>(b.kind);
    return ba.op == bb.op && nodesEqual(*ba.lhs, *bb.lhs) && nodesEqual(*ba.rhs, *bb.rhs);
}

} // namespace

Expr Expr::parse(std::string_view source) {
    return Expr(Parser(source).run());
}

double Expr::value(double x) const { return evalValue(*root_, x); }

DualValue Expr::dual(double x) const { return evalDual(*root_, x); }

std::string Expr::text() const {
    std::ostringstream os;
    printNode(os, *root_);
    return os.str();
}

bool Expr::structurallyEqual(const Expr& other) const {
    return nodesEqual(*root_, *other.root_);
}

RealFn exprValueFn(const Expr& e) {
    return [e](double x) { return e.value(x); };
}

RealFn exprDerivativeFn(const Expr& e) {
    return [e](double x) { return e.dual(x).derivative; };
}

} // namespace qbound
