#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstring>

#include "gsym/expr.hpp"
#include "gsym/rng.hpp"

using namespace gsym;

namespace {

Jet3 ev(const std::string& src, std::array<double, 4> p, ParamEnv env = {}) {
    return eval_jet(parse_expr(src), p, env);
}

double rel_err(double a, double b) {
    double d = std::abs(a - b);
    double s = std::max(std::abs(a), std::abs(b));
    return s > 1e-12 ? d / s : d;
}

// random polynomial of total degree <= 3 in 4 variables, with its AST
Expr random_poly(SplitMix64& rng) {
    Expr acc = ex_num(rng.uniform_sym());
    for (int term = 0; term < 6; ++term) {
        Expr t = ex_num(rng.uniform_sym());
        int deg = static_cast<int>(rng.next() % 4);
        for (int d = 0; d < deg; ++d)
            t = ex_mul(t, ex_var(static_cast<int>(rng.next() % 4)));
        acc = ex_add(acc, t);
    }
    return acc;
}

Expr random_tree(SplitMix64& rng, int depth) {
    if (depth <= 0) {
        switch (rng.next() % 4) {
            case 0: return ex_num(rng.uniform01() * 3.0);
            case 1: return ex_var(static_cast<int>(rng.next() % 4));
            case 2: return ex_param("alpha");
            default: return ex_const((rng.next() % 2) ? "pi" : "e");
        }
    }
    switch (rng.next() % 8) {
        case 0: return ex_add(random_tree(rng, depth - 1), random_tree(rng, depth - 1));
        case 1: return ex_sub(random_tree(rng, depth - 1), random_tree(rng, depth - 1));
        case 2: return ex_mul(random_tree(rng, depth - 1), random_tree(rng, depth - 1));
        case 3: return ex_div(random_tree(rng, depth - 1), random_tree(rng, depth - 1));
        case 4: return ex_neg(random_tree(rng, depth - 1));
        case 5: return ex_pow(random_tree(rng, depth - 1), ex_num(double(rng.next() % 4)));
        case 6:
            return ex_call(static_cast<Func>(rng.next() % 9), random_tree(rng, depth - 1));
        default: return ex_num(rng.uniform_sym() * 2.0);
    }
}

}  // namespace

TEST_CASE("parser: structure and precedence") {
    Expr e = parse_expr("sinh(2*u) - cosh(2*u)*sin(2*v)");
    CHECK(e->kind == ExprKind::Sub);
    CHECK(e->a->kind == ExprKind::Call);
    CHECK(e->b->kind == ExprKind::Mul);

    Expr x = parse_expr("x");
    CHECK(x->kind == ExprKind::Var);
    CHECK(x->slot == 0);

    // ^ is right-associative: 2^3^2 = 512
    CHECK(ev("2^3^2", {0, 0, 0, 0}).v == doctest::Approx(512.0).epsilon(1e-14));
    CHECK(ev("2*3+4", {0, 0, 0, 0}).v == doctest::Approx(10.0));
    CHECK(ev("2+3*4", {0, 0, 0, 0}).v == doctest::Approx(14.0));
    CHECK(ev("-2^2", {0, 0, 0, 0}).v == doctest::Approx(-4.0));
    CHECK(ev("(-2)^2", {0, 0, 0, 0}).v == doctest::Approx(4.0));
    CHECK(ev("2^-1", {0, 0, 0, 0}).v == doctest::Approx(0.5));
    CHECK(ev("pi", {0, 0, 0, 0}).v == doctest::Approx(M_PI));
    CHECK(ev("e^1", {0, 0, 0, 0}).v == doctest::Approx(M_E));
}

TEST_CASE("parser: aliases map to the right slots") {
    CHECK(parse_expr("x1")->slot == 0);
    CHECK(parse_expr("x2")->slot == 1);
    CHECK(parse_expr("y1")->slot == 2);
    CHECK(parse_expr("y2")->slot == 3);
    CHECK(parse_expr("z")->slot == 2);
    CHECK(parse_expr("t")->slot == 3);
    CHECK(parse_expr("u")->slot == 2);
    CHECK(parse_expr("v")->slot == 3);
}

TEST_CASE("parser: errors carry byte offsets") {
    CHECK_THROWS_AS(parse_expr("1 + "), ParseError);
    CHECK_THROWS_AS(parse_expr("foo(2)"), ParseError);  // unknown function
    CHECK_THROWS_AS(parse_expr("(1+2"), ParseError);
    CHECK_THROWS_AS(parse_expr("1 2"), ParseError);
    try {
        parse_expr("1 + *2");
    } catch (const ParseError& pe) {
        CHECK(pe.offset == 4);
    }
    // unknown identifier is allowed: becomes a parameter
    Expr p = parse_expr("lambda");
    CHECK(p->kind == ExprKind::Param);
    CHECK_THROWS_AS(eval_jet(p, {0, 0, 0, 0}, {}), UnboundParam);
    CHECK(eval_jet(p, {0, 0, 0, 0}, {{"lambda", 2.5}}).v == doctest::Approx(2.5));
}

TEST_CASE("print/parse round-trip is the identity on the AST") {
    const char* samples[] = {
        "sinh(2*u) - cosh(2*u)*sin(2*v)",
        "x*y - (x + y)/(1 + x^2)",
        "-x^2 + (-x)^2",
        "2^3^2",
        "x^(y + 1)",
        "1/(1 + exp(-x))",
        "lambda*(1 + y^2)/(1 + x^2 + y^2)",
        "-(3/16)*lambda*e^(7/6*log(4))",
        "sec(2*v) + tan(2*v)",
        "1.5e-3*x - 2.25",
    };
    for (const char* s : samples) {
        Expr e = parse_expr(s);
        Expr back = parse_expr(print_expr(e));
        CHECK_MESSAGE(expr_equal(e, back), "round-trip failed for: ", s, " printed as ",
                      print_expr(e));
    }

    SplitMix64 rng(42);
    int checked = 0;
    for (int i = 0; i < 400; ++i) {
        Expr e = random_tree(rng, 4);
        std::string printed = print_expr(e);
        Expr back = parse_expr(printed);
        CHECK_MESSAGE(expr_equal(e, back), "round-trip failed for generated: ", printed);
        ++checked;
    }
    CHECK(checked == 400);
}

TEST_CASE("eval_jet: polynomial and exp anchors") {
    Jet3 j = ev("x*y", {2, 3, 0, 0});
    CHECK(j.v == doctest::Approx(6.0));
    CHECK(j.g[0] == doctest::Approx(3.0));
    CHECK(j.g[1] == doctest::Approx(2.0));
    CHECK(j.h[0][1] == doctest::Approx(1.0));
    CHECK(j.h[1][0] == doctest::Approx(1.0));
    for (int i = 0; i < 4; ++i)
        for (int k = 0; k < 4; ++k)
            for (int m = 0; m < 4; ++m) CHECK(j.t[i][k][m] == 0.0);

    Jet3 ee = ev("exp(x)", {0, 0.3, -0.2, 0.9});
    CHECK(ee.v == doctest::Approx(1.0));
    CHECK(ee.g[0] == doctest::Approx(1.0));
    CHECK(ee.h[0][0] == doctest::Approx(1.0));
    CHECK(ee.t[0][0][0] == doctest::Approx(1.0));
    CHECK(ee.g[1] == 0.0);

    Jet3 s = ev("sqrt(1+x^2+y^2)", {1, 1, 0, 0});
    CHECK(s.v == doctest::Approx(std::sqrt(3.0)).epsilon(1e-14));
    Jet3 fd = finite_diff_jet(parse_expr("sqrt(1+x^2+y^2)"), {1, 1, 0, 0}, {}, 1e-4);
    for (int i = 0; i < 4; ++i) CHECK(rel_err(s.g[i], fd.g[i]) < 1e-6);
    for (int i = 0; i < 4; ++i)
        for (int k = 0; k < 4; ++k) CHECK(rel_err(s.h[i][k], fd.h[i][k]) < 1e-6);
}

TEST_CASE("finite_diff_jet: analytic anchors") {
    Jet3 fd = finite_diff_jet(parse_expr("sin(x)"), {0.5, 0, 0, 0}, {}, 1e-4);
    CHECK(std::abs(fd.g[0] - std::cos(0.5)) < 1e-8);

    Jet3 c = finite_diff_jet(parse_expr("c"), {0.1, 0.2, 0.3, 0.4}, {{"c", 3.7}}, 1e-3);
    for (int i = 0; i < 4; ++i) {
        CHECK(c.g[i] == doctest::Approx(0.0).epsilon(1e-9));
        for (int k = 0; k < 4; ++k) CHECK(c.h[i][k] == doctest::Approx(0.0).epsilon(1e-9));
    }

    Jet3 cube = finite_diff_jet(parse_expr("x^3"), {0.7, 0, 0, 0}, {}, 1e-3);
    CHECK(std::abs(cube.t[0][0][0] - 6.0) < 1e-3);

    CHECK_THROWS_AS(finite_diff_jet(parse_expr("x"), {0, 0, 0, 0}, {}, 1.0), DomainError);
}

TEST_CASE("domain errors") {
    CHECK_THROWS_AS(ev("log(x)", {-1, 0, 0, 0}), DomainError);
    CHECK_THROWS_AS(ev("sqrt(x)", {-0.5, 0, 0, 0}), DomainError);
    CHECK_THROWS_AS(ev("1/x", {0, 0, 0, 0}), DomainError);
    CHECK_NOTHROW(ev("1/x", {1e-200, 0, 0, 0}));
}

TEST_CASE("property: jet product equals product of jets on degree<=3 polynomials") {
    SplitMix64 rng(2024);
    for (int iter = 0; iter < 200; ++iter) {
        Expr p = random_poly(rng);
        Expr q = random_poly(rng);
        auto pt = rng.point_sym();
        Jet3 jp = eval_jet(p, pt, {});
        Jet3 jq = eval_jet(q, pt, {});
        Jet3 direct = eval_jet(ex_mul(p, q), pt, {});
        Jet3 prod = jp * jq;
        double scale = std::max({1.0, std::abs(direct.v)});
        CHECK(jet_max_abs_diff(direct, prod) / scale < 1e-13);
    }
}

TEST_CASE("property: AD matches central finite differences for every elementary function") {
    const char* fns[] = {"exp", "log", "sqrt", "sin", "cos", "tan", "sec", "sinh", "cosh"};
    SplitMix64 rng(7);
    for (const char* fn : fns) {
        bool positive_domain = std::string(fn) == "log" || std::string(fn) == "sqrt";
        // argument range keeps tan/sec away from the pole at pi/2
        std::string shift = positive_domain ? "2.5" : "0.2";
        std::string src = std::string(fn) + "(0.3*x + 0.2*y - 0.1*u + 0.4*v + " + shift + ")";
        Expr e = parse_expr(src);
        int done = 0;
        while (done < 100) {
            auto pt = rng.point_sym();
            Jet3 ad = eval_jet(e, pt, {});
            Jet3 fd = finite_diff_jet(e, pt, {}, 1e-3);
            ++done;
            for (int i = 0; i < 4; ++i) {
                CHECK(rel_err(ad.g[i], fd.g[i]) < 1e-5);
                for (int j = 0; j < 4; ++j) {
                    CHECK(rel_err(ad.h[i][j], fd.h[i][j]) < 1e-5);
                    for (int k = 0; k < 4; ++k) CHECK(rel_err(ad.t[i][j][k], fd.t[i][j][k]) < 1e-3);
                }
            }
        }
    }
}

TEST_CASE("determinism: identical inputs give bit-identical jets") {
    Expr e = parse_expr("exp(x*y) - sqrt(1 + u^2)/cosh(v)");
    std::array<double, 4> p{0.3, -0.7, 0.11, 0.92};
    Jet3 a = eval_jet(e, p, {});
    Jet3 b = eval_jet(e, p, {});
    CHECK(jet_max_abs_diff(a, b) == 0.0);
    CHECK(std::memcmp(&a.v, &b.v, sizeof(double)) == 0);
}
