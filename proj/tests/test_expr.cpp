#include <doctest.h>

#include <vector>

#include "invoser/expr.hpp"
#include "invoser/series.hpp"

using namespace invoser;

TEST_SUITE_BEGIN("expr");

TEST_CASE("parsing basics") {
    ExprPtr e = parse_expression("exp(x)-1");
    CHECK(e->op == ExprNode::Op::Sub);
    CHECK(e->lhs->op == ExprNode::Op::Apply);
    CHECK(e->lhs->func == ExprNode::Func::Exp);
    CHECK(e->rhs->op == ExprNode::Op::Const);

    ExprPtr neg = parse_expression("-x/(1+x)");
    CHECK(neg->op == ExprNode::Op::Sub);
    CHECK(neg->lhs->op == ExprNode::Op::Const);
    CHECK(neg->lhs->value == Rational(0));

    ExprPtr nested = parse_expression("exp(sin(x))-1");
    CHECK(nested->lhs->op == ExprNode::Op::Apply);
    CHECK(nested->lhs->lhs->op == ExprNode::Op::Apply);
    CHECK(nested->lhs->lhs->func == ExprNode::Func::Sin);
}

TEST_CASE("constant literals fold") {
    ExprPtr e = parse_expression("3/2");
    REQUIRE(e->op == ExprNode::Op::Const);
    CHECK(e->value == Rational(3, 2));
    ExprPtr f = parse_expression("2^10");
    REQUIRE(f->op == ExprNode::Op::Const);
    CHECK(f->value == Rational(1024));
    CHECK_THROWS_AS(parse_expression("1/0"), DivisionByNonUnit);
}

TEST_CASE("syntax errors carry the byte offset") {
    try {
        parse_expression("exp(x");
        FAIL("expected SyntaxError");
    } catch (const SyntaxError& e) {
        CHECK(e.offset == 5);
    }
    try {
        parse_expression("x + $");
        FAIL("expected SyntaxError");
    } catch (const SyntaxError& e) {
        CHECK(e.offset == 4);
    }
    CHECK_THROWS_AS(parse_expression("foo(x)"), SyntaxError);
    CHECK_THROWS_AS(parse_expression("x^y"), SyntaxError);
    CHECK_THROWS_AS(parse_expression("x x"), SyntaxError);
    CHECK_THROWS_AS(parse_expression(""), SyntaxError);
}

TEST_CASE("format round trip") {
    const char* corpus[] = {
        "exp(x)-1",
        "-x/(1+x)",
        "exp(sin(x))-1",
        "log(1+x)",
        "(1+x)^3 - cos(x)*sin(x)",
        "x^2/2 + 3/2*x",
        "1 - (2 - x) - x*(x - 1)",
        "exp(2*x)-1",
    };
    for (const char* text : corpus) {
        ExprPtr once = parse_expression(text);
        std::string printed = format_expression(*once);
        ExprPtr twice = parse_expression(printed);
        CHECK(format_expression(*twice) == printed);
        CHECK(eval_series(*once, 7) == eval_series(*twice, 7));
    }
}

TEST_CASE("series expansion of the reference generators") {
    Series e = eval_series("exp(x)-1", 6);
    for (int n = 1; n <= 6; ++n) CHECK(e.coeff(n) == Rational(1));
    CHECK(e.coeff(0) == Rational(0));

    Series f = eval_series("-x/(1+x)", 5);
    for (int n = 1; n <= 5; ++n) {
        Rational v = Rational::factorial(static_cast<unsigned>(n));
        CHECK(f.coeff(n) == (n % 2 == 0 ? v : -v));
    }

    Series s = eval_series("exp(sin(x))-1", 10);
    std::vector<Rational> expected = {0, 1, 1, 0, -3, -8, -3, 56, 217, 64, -2951};
    CHECK(s.coeffs() == expected);
}

TEST_CASE("exp and log are mutually inverse") {
    Series e = eval_series("exp(x)-1", 9);
    Series l = eval_series("log(1+x)", 9);
    CHECK(series_inverse(e) == l);
    CHECK(series_compose(e, l) == Series::identity(9));
}

TEST_CASE("sin expands to an odd series") {
    Series s = eval_series("sin(x)", 9);
    CHECK(is_odd(s));
    CHECK(s.coeff(1) == Rational(1));
    CHECK(s.coeff(3) == Rational(-1));
    Series c = eval_series("cos(x)", 8);
    CHECK(c.coeff(0) == Rational(1));
    CHECK(c.coeff(2) == Rational(-1));
}

TEST_CASE("domain checks") {
    CHECK_THROWS_AS(eval_series("1/x", 4), DivisionByNonUnit);
    CHECK_THROWS_AS(eval_series("x/(x+x)", 4), DivisionByNonUnit);
    CHECK_THROWS_AS(eval_series("exp(1+x)", 4), TranscendentalAtNonzeroConstant);
    CHECK_THROWS_AS(eval_series("sin(2+x)", 4), TranscendentalAtNonzeroConstant);
    CHECK_THROWS_AS(eval_series("log(x)", 4), TranscendentalAtNonzeroConstant);
    CHECK(eval_series("log((1+x)^2)", 6) ==
          series_scale(eval_series("log(1+x)", 6), Rational(2)));
}

TEST_CASE("division folds exactly") {
    CHECK(eval_series("x/2", 4) == series_scale(Series::identity(4), Rational(1, 2)));
    Series q = eval_series("(1+x)/(1+x)", 5);
    CHECK(q == Series::constant(5, Rational(1)));
}

TEST_SUITE_END();
