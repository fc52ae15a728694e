#include "invoser/expr.hpp"

#include <cctype>
#include <utility>
#include <vector>

namespace invoser {

namespace {

ExprPtr make_const(Rational v) {
    auto n = std::make_shared<ExprNode>();
    n->op = ExprNode::Op::Const;
    n->value = std::move(v);
    return n;
}

ExprPtr make_binary(ExprNode::Op op, ExprPtr a, ExprPtr b) {
    // Constant subtrees fold immediately; this is where literals like 3/2
    // become a single Const.
    if (a->op == ExprNode::Op::Const && b->op == ExprNode::Op::Const) {
        switch (op) {
            case ExprNode::Op::Add: return make_const(a->value + b->value);
            case ExprNode::Op::Sub: return make_const(a->value - b->value);
            case ExprNode::Op::Mul: return make_const(a->value * b->value);
            case ExprNode::Op::Div:
                if (b->value.is_zero())
                    throw DivisionByNonUnit("constant division by zero");
                return make_const(a->value / b->value);
            default: break;
        }
    }
    auto n = std::make_shared<ExprNode>();
    n->op = op;
    n->lhs = std::move(a);
    n->rhs = std::move(b);
    return n;
}

class Parser {
public:
    explicit Parser(const std::string& text) : text_(text) {}

    ExprPtr parse() {
        ExprPtr e = parse_expr();
        skip_ws();
        if (pos_ != text_.size()) throw SyntaxError("unexpected trailing input", pos_);
        return e;
    }

private:
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    bool consume(char c) {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    ExprPtr parse_expr() {
        ExprPtr acc;
        if (consume('-')) {
            acc = make_binary(ExprNode::Op::Sub, make_const(Rational(0)), parse_term());
        } else {
            consume('+');
            acc = parse_term();
        }
        for (;;) {
            if (consume('+')) {
                acc = make_binary(ExprNode::Op::Add, acc, parse_term());
            } else if (consume('-')) {
                acc = make_binary(ExprNode::Op::Sub, acc, parse_term());
            } else {
                return acc;
            }
        }
    }

    ExprPtr parse_term() {
        ExprPtr acc = parse_factor();
        for (;;) {
            if (consume('*')) {
                acc = make_binary(ExprNode::Op::Mul, acc, parse_factor());
            } else if (consume('/')) {
                acc = make_binary(ExprNode::Op::Div, acc, parse_factor());
            } else {
                return acc;
            }
        }
    }

    ExprPtr parse_factor() {
        ExprPtr base = parse_atom();
        if (!consume('^')) return base;
        skip_ws();
        std::size_t at = pos_;
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            throw SyntaxError("exponent must be an unsigned integer literal", pos_);
        long e = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            e = e * 10 + (text_[pos_] - '0');
            if (e > 1'000'000) throw SyntaxError("exponent too large", at);
            ++pos_;
        }
        if (base->op == ExprNode::Op::Const) return make_const(base->value.pow(e));
        auto n = std::make_shared<ExprNode>();
        n->op = ExprNode::Op::Pow;
        n->exponent = static_cast<int>(e);
        n->lhs = std::move(base);
        return n;
    }

    ExprPtr parse_atom() {
        skip_ws();
        if (pos_ >= text_.size()) throw SyntaxError("unexpected end of input", pos_);
        char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) return parse_number();
        if (c == '(') {
            ++pos_;
            ExprPtr e = parse_expr();
            if (!consume(')')) throw SyntaxError("expected ')'", pos_);
            return e;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) return parse_name();
        throw SyntaxError(std::string("unexpected character '") + c + "'", pos_);
    }

    ExprPtr parse_number() {
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        return make_const(Rational::from_string(text_.substr(start, pos_ - start)));
    }

    ExprPtr parse_name() {
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        std::string name = text_.substr(start, pos_ - start);
        if (name == "x") {
            auto n = std::make_shared<ExprNode>();
            n->op = ExprNode::Op::Var;
            return n;
        }
        ExprNode::Func func;
        if (name == "exp") {
            func = ExprNode::Func::Exp;
        } else if (name == "sin") {
            func = ExprNode::Func::Sin;
        } else if (name == "cos") {
            func = ExprNode::Func::Cos;
        } else if (name == "log") {
            func = ExprNode::Func::Log;
        } else {
            throw SyntaxError("unknown name '" + name + "'", start);
        }
        if (!consume('(')) throw SyntaxError("expected '(' after function name", pos_);
        ExprPtr arg = parse_expr();
        if (!consume(')')) throw SyntaxError("expected ')'", pos_);
        auto n = std::make_shared<ExprNode>();
        n->op = ExprNode::Op::Apply;
        n->func = func;
        n->lhs = std::move(arg);
        return n;
    }

    const std::string& text_;
    std::size_t pos_ = 0;
};

const char* func_name(ExprNode::Func f) {
    switch (f) {
        case ExprNode::Func::Exp: return "exp";
        case ExprNode::Func::Sin: return "sin";
        case ExprNode::Func::Cos: return "cos";
        case ExprNode::Func::Log: return "log";
    }
    return "?";
}

int precedence(ExprNode::Op op) {
    switch (op) {
        case ExprNode::Op::Add:
        case ExprNode::Op::Sub: return 1;
        case ExprNode::Op::Mul:
        case ExprNode::Op::Div: return 2;
        case ExprNode::Op::Pow: return 3;
        default: return 4;
    }
}

void format_rec(const ExprNode& e, int parent_prec, bool is_right_operand, std::string& out) {
    int prec = precedence(e.op);
    bool parens = prec < parent_prec || (prec == parent_prec && is_right_operand);
    switch (e.op) {
        case ExprNode::Op::Const:
            if (e.value.sign() < 0 && parent_prec > 0) {
                out += "(" + e.value.str() + ")";
            } else {
                out += e.value.str();
            }
            return;
        case ExprNode::Op::Var: out += "x"; return;
        case ExprNode::Op::Apply:
            out += func_name(e.func);
            out += "(";
            format_rec(*e.lhs, 0, false, out);
            out += ")";
            return;
        case ExprNode::Op::Pow:
            if (parens) out += "(";
            format_rec(*e.lhs, 4, false, out);  // base must be atomic
            out += "^" + std::to_string(e.exponent);
            if (parens) out += ")";
            return;
        default: break;
    }
    const char* sym = e.op == ExprNode::Op::Add   ? " + "
                      : e.op == ExprNode::Op::Sub ? " - "
                      : e.op == ExprNode::Op::Mul ? "*"
                                                  : "/";
    if (parens) out += "(";
    format_rec(*e.lhs, prec, false, out);
    out += sym;
    format_rec(*e.rhs, prec, true, out);
    if (parens) out += ")";
}

// Multiplicative reciprocal 1/g for a series with unit constant term.
Series reciprocal_series(const Series& g) {
    if (g.coeff(0).is_zero())
        throw DivisionByNonUnit("series division needs a nonzero constant term");
    int N = g.order();
    Rational lead = g.coeff(0).reciprocal();
    std::vector<Rational> h;
    h.reserve(static_cast<std::size_t>(N) + 1);
    h.push_back(lead);
    for (int n = 1; n <= N; ++n) {
        Rational acc(0);
        for (int k = 1; k <= n; ++k)
            acc += Rational::binomial(static_cast<unsigned>(n), static_cast<unsigned>(k)) *
                   g.coeff(k) * h[static_cast<std::size_t>(n - k)];
        h.push_back(-(acc * lead));
    }
    return Series(N, std::move(h));
}

Series taylor_table(ExprNode::Func f, int order) {
    std::vector<Rational> c;
    c.reserve(static_cast<std::size_t>(order) + 1);
    for (int n = 0; n <= order; ++n) {
        switch (f) {
            case ExprNode::Func::Exp: c.emplace_back(1); break;
            case ExprNode::Func::Sin: c.push_back(Rational(n % 4 == 1 ? 1 : n % 4 == 3 ? -1 : 0)); break;
            case ExprNode::Func::Cos: c.push_back(Rational(n % 4 == 0 ? 1 : n % 4 == 2 ? -1 : 0)); break;
            case ExprNode::Func::Log:
                // log(1+x): D^n at 0 is (-1)^{n-1} (n-1)! for n >= 1.
                if (n == 0) {
                    c.emplace_back(0);
                } else {
                    Rational v = Rational::factorial(static_cast<unsigned>(n - 1));
                    c.push_back(n % 2 == 0 ? -v : v);
                }
                break;
        }
    }
    return Series(order, std::move(c));
}

Series eval_rec(const ExprNode& e, int order) {
    switch (e.op) {
        case ExprNode::Op::Const: return Series::constant(order, e.value);
        case ExprNode::Op::Var: {
            std::vector<Rational> c(static_cast<std::size_t>(order) + 1, Rational(0));
            if (order >= 1) c[1] = Rational(1);
            return Series(order, std::move(c));
        }
        case ExprNode::Op::Add: return eval_rec(*e.lhs, order) + eval_rec(*e.rhs, order);
        case ExprNode::Op::Sub: return eval_rec(*e.lhs, order) - eval_rec(*e.rhs, order);
        case ExprNode::Op::Mul: return eval_rec(*e.lhs, order) * eval_rec(*e.rhs, order);
        case ExprNode::Op::Div:
            return eval_rec(*e.lhs, order) * reciprocal_series(eval_rec(*e.rhs, order));
        case ExprNode::Op::Pow: {
            Series base = eval_rec(*e.lhs, order);
            Series acc = Series::constant(order, Rational(1));
            for (int i = 0; i < e.exponent; ++i) acc = acc * base;
            return acc;
        }
        case ExprNode::Op::Apply: {
            Series arg = eval_rec(*e.lhs, order);
            if (e.func == ExprNode::Func::Log) {
                if (!arg.coeff(0).is_one())
                    throw TranscendentalAtNonzeroConstant(
                        "log needs an argument with constant term 1");
                Series shifted = arg - Series::constant(order, Rational(1));
                return series_compose(taylor_table(e.func, order), shifted);
            }
            if (!arg.coeff(0).is_zero())
                throw TranscendentalAtNonzeroConstant(
                    std::string(func_name(e.func)) + " needs an argument vanishing at 0");
            return series_compose(taylor_table(e.func, order), arg);
        }
    }
    throw Error("unreachable expression node");
}

}  // namespace

ExprPtr parse_expression(const std::string& text) { return Parser(text).parse(); }

std::string format_expression(const ExprNode& e) {
    std::string out;
    format_rec(e, 0, false, out);
    return out;
}

Series eval_series(const ExprNode& e, int order) {
    if (order < 0) throw RangeError("series order must be >= 0");
    return eval_rec(e, order);
}

Series eval_series(const std::string& text, int order) {
    return eval_series(*parse_expression(text), order);
}

}  // namespace invoser
