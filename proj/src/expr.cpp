#include "gsym/expr.hpp"

#include <charconv>
#include <cmath>
#include <cstring>

namespace gsym {

namespace {

Expr make(ExprNode n) { return std::make_shared<const ExprNode>(std::move(n)); }

const std::map<std::string, Func>& func_table() {
    static const std::map<std::string, Func> t = {
        {"exp", Func::Exp},   {"log", Func::Log}, {"sqrt", Func::Sqrt},
        {"sin", Func::Sin},   {"cos", Func::Cos}, {"tan", Func::Tan},
        {"sec", Func::Sec},   {"sinh", Func::Sinh}, {"cosh", Func::Cosh},
    };
    return t;
}

const char* func_name(Func f) {
    switch (f) {
        case Func::Exp: return "exp";
        case Func::Log: return "log";
        case Func::Sqrt: return "sqrt";
        case Func::Sin: return "sin";
        case Func::Cos: return "cos";
        case Func::Tan: return "tan";
        case Func::Sec: return "sec";
        case Func::Sinh: return "sinh";
        case Func::Cosh: return "cosh";
    }
    return "?";
}

}  // namespace

Expr ex_num(double v) {
    // literals are stored non-negative so parse(print(e)) is the identity;
    // the parser only ever produces '-' as a Neg node
    if (v < 0.0 || (v == 0.0 && std::signbit(v))) return ex_neg(ex_num(-v));
    ExprNode n;
    n.kind = ExprKind::Num;
    n.num = v;
    return make(std::move(n));
}

Expr ex_var(int slot) {
    static const char* names[4] = {"x", "y", "u", "v"};
    return ex_var(slot, names[slot]);
}

Expr ex_var(int slot, const std::string& name) {
    ExprNode n;
    n.kind = ExprKind::Var;
    n.slot = slot;
    n.name = name;
    return make(std::move(n));
}

Expr ex_param(const std::string& name) {
    ExprNode n;
    n.kind = ExprKind::Param;
    n.name = name;
    return make(std::move(n));
}

Expr ex_const(const std::string& name) {
    ExprNode n;
    n.kind = ExprKind::ConstSym;
    n.name = name;
    n.num = (name == "pi") ? M_PI : M_E;
    return make(std::move(n));
}

static Expr binary(ExprKind k, Expr a, Expr b) {
    ExprNode n;
    n.kind = k;
    n.a = std::move(a);
    n.b = std::move(b);
    return make(std::move(n));
}

Expr ex_neg(Expr a) {
    ExprNode n;
    n.kind = ExprKind::Neg;
    n.a = std::move(a);
    return make(std::move(n));
}

Expr ex_add(Expr a, Expr b) { return binary(ExprKind::Add, std::move(a), std::move(b)); }
Expr ex_sub(Expr a, Expr b) { return binary(ExprKind::Sub, std::move(a), std::move(b)); }
Expr ex_mul(Expr a, Expr b) { return binary(ExprKind::Mul, std::move(a), std::move(b)); }
Expr ex_div(Expr a, Expr b) { return binary(ExprKind::Div, std::move(a), std::move(b)); }
Expr ex_pow(Expr a, Expr b) { return binary(ExprKind::Pow, std::move(a), std::move(b)); }

Expr ex_call(Func f, Expr a) {
    ExprNode n;
    n.kind = ExprKind::Call;
    n.func = f;
    n.a = std::move(a);
    return make(std::move(n));
}

bool expr_equal(const Expr& a, const Expr& b) {
    if (a == b) return true;
    if (!a || !b || a->kind != b->kind) return false;
    switch (a->kind) {
        case ExprKind::Num: return a->num == b->num;
        case ExprKind::ConstSym: return a->name == b->name;
        case ExprKind::Var: return a->slot == b->slot && a->name == b->name;
        case ExprKind::Param: return a->name == b->name;
        case ExprKind::Neg: return expr_equal(a->a, b->a);
        case ExprKind::Call: return a->func == b->func && expr_equal(a->a, b->a);
        default: return expr_equal(a->a, b->a) && expr_equal(a->b, b->b);
    }
}

const std::map<std::string, int>& default_var_slots() {
    static const std::map<std::string, int> t = {
        {"x", 0}, {"y", 1}, {"u", 2}, {"v", 3},
        {"x1", 0}, {"x2", 1}, {"y1", 2}, {"y2", 3},
        {"z", 2}, {"t", 3},
    };
    return t;
}

// ---------------------------------------------------------------------------
// Parser: recursive descent over
//   expr   := term (("+"|"-") term)*
//   term   := factor (("*"|"/") factor)*
//   factor := ("-")? power
//   power  := atom ("^" factor)?
//   atom   := NUMBER | IDENT | IDENT "(" expr ")" | "(" expr ")"
// ---------------------------------------------------------------------------

namespace {

struct Parser {
    const std::string& src;
    const std::map<std::string, int>& vars;
    size_t pos = 0;

    void skip_ws() {
        while (pos < src.size() && (src[pos] == ' ' || src[pos] == '\t' || src[pos] == '\n' ||
                                    src[pos] == '\r'))
            ++pos;
    }

    bool eat(char c) {
        skip_ws();
        if (pos < src.size() && src[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, pos); }

    Expr parse() {
        Expr e = expr();
        skip_ws();
        if (pos != src.size()) fail("unexpected trailing input");
        return e;
    }

    Expr expr() {
        Expr e = term();
        for (;;) {
            skip_ws();
            if (eat('+'))
                e = ex_add(e, term());
            else if (eat('-'))
                e = ex_sub(e, term());
            else
                return e;
        }
    }

    Expr term() {
        Expr e = factor();
        for (;;) {
            skip_ws();
            if (eat('*'))
                e = ex_mul(e, factor());
            else if (eat('/'))
                e = ex_div(e, factor());
            else
                return e;
        }
    }

    Expr factor() {
        skip_ws();
        if (eat('-')) return ex_neg(power());
        return power();
    }

    Expr power() {
        Expr base = atom();
        skip_ws();
        if (eat('^')) return ex_pow(base, factor());  // right-associative
        return base;
    }

    Expr atom() {
        skip_ws();
        if (pos >= src.size()) fail("unexpected end of input");
        char c = src[pos];
        if (c == '(') {
            ++pos;
            Expr e = expr();
            if (!eat(')')) fail("expected ')'");
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return ident();
        fail(std::string("unexpected character '") + c + "'");
    }

    Expr number() {
        size_t start = pos;
        while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) ++pos;
        if (pos < src.size() && src[pos] == '.') {
            ++pos;
            while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) ++pos;
        }
        if (pos == start || (pos == start + 1 && src[start] == '.'))
            fail("malformed number");
        // optional exponent; backtrack if 'e'/'E' is not followed by digits
        size_t mark = pos;
        if (pos < src.size() && (src[pos] == 'e' || src[pos] == 'E')) {
            ++pos;
            if (pos < src.size() && (src[pos] == '+' || src[pos] == '-')) ++pos;
            size_t dstart = pos;
            while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) ++pos;
            if (pos == dstart) pos = mark;
        }
        double value = 0.0;
        auto res = std::from_chars(src.data() + start, src.data() + pos, value);
        if (res.ec != std::errc()) fail("malformed number");
        return ex_num(value);
    }

    Expr ident() {
        size_t start = pos;
        while (pos < src.size() &&
               (std::isalnum(static_cast<unsigned char>(src[pos])) || src[pos] == '_'))
            ++pos;
        std::string name = src.substr(start, pos - start);
        skip_ws();
        if (pos < src.size() && src[pos] == '(') {
            auto it = func_table().find(name);
            if (it == func_table().end()) {
                pos = start;
                fail("unknown function name '" + name + "'");
            }
            ++pos;
            Expr arg = expr();
            if (!eat(')')) fail("expected ')' after function argument");
            return ex_call(it->second, arg);
        }
        if (name == "pi" || name == "e") return ex_const(name);
        auto vit = vars.find(name);
        if (vit != vars.end()) return ex_var(vit->second, name);
        return ex_param(name);  // unknown identifier: parameter, bound at eval
    }
};

}  // namespace

Expr parse_expr(const std::string& source, const std::map<std::string, int>& vars) {
    Parser p{source, vars};
    return p.parse();
}

// ---------------------------------------------------------------------------
// Printer
// ---------------------------------------------------------------------------

namespace {

int prec_of(const Expr& e) {
    switch (e->kind) {
        case ExprKind::Add:
        case ExprKind::Sub: return 1;
        case ExprKind::Mul:
        case ExprKind::Div: return 2;
        case ExprKind::Neg: return 3;
        case ExprKind::Pow: return 4;
        default: return 5;
    }
}

std::string fmt_double(double v) {
    char buf[40];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

void print_rec(const Expr& e, int parent_prec, bool right_side, std::string& out) {
    int p = prec_of(e);
    bool parens = p < parent_prec || (p == parent_prec && right_side && p <= 2);
    if (parens) out += '(';
    switch (e->kind) {
        case ExprKind::Num: out += fmt_double(e->num); break;
        case ExprKind::ConstSym:
        case ExprKind::Var:
        case ExprKind::Param: out += e->name; break;
        case ExprKind::Neg:
            out += '-';
            print_rec(e->a, 4, false, out);  // '-' binds a power, per the grammar
            break;
        case ExprKind::Add:
            print_rec(e->a, 1, false, out);
            out += " + ";
            print_rec(e->b, 1, true, out);
            break;
        case ExprKind::Sub:
            print_rec(e->a, 1, false, out);
            out += " - ";
            print_rec(e->b, 1, true, out);
            break;
        case ExprKind::Mul:
            print_rec(e->a, 2, false, out);
            out += "*";
            print_rec(e->b, 2, true, out);
            break;
        case ExprKind::Div:
            print_rec(e->a, 2, false, out);
            out += "/";
            print_rec(e->b, 2, true, out);
            break;
        case ExprKind::Pow:
            print_rec(e->a, 5, false, out);  // base must be an atom
            out += "^";
            print_rec(e->b, 3, true, out);   // exponent is a factor
            break;
        case ExprKind::Call:
            out += func_name(e->func);
            out += '(';
            print_rec(e->a, 0, false, out);
            out += ')';
            break;
    }
    if (parens) out += ')';
}

}  // namespace

std::string print_expr(const Expr& e) {
    std::string out;
    print_rec(e, 0, false, out);
    return out;
}

Expr substitute_vars(const Expr& e, const std::array<Expr, 4>& subs) {
    switch (e->kind) {
        case ExprKind::Var: return subs[e->slot];
        case ExprKind::Num:
        case ExprKind::ConstSym:
        case ExprKind::Param: return e;
        case ExprKind::Neg: return ex_neg(substitute_vars(e->a, subs));
        case ExprKind::Call: return ex_call(e->func, substitute_vars(e->a, subs));
        case ExprKind::Add: return ex_add(substitute_vars(e->a, subs), substitute_vars(e->b, subs));
        case ExprKind::Sub: return ex_sub(substitute_vars(e->a, subs), substitute_vars(e->b, subs));
        case ExprKind::Mul: return ex_mul(substitute_vars(e->a, subs), substitute_vars(e->b, subs));
        case ExprKind::Div: return ex_div(substitute_vars(e->a, subs), substitute_vars(e->b, subs));
        case ExprKind::Pow: return ex_pow(substitute_vars(e->a, subs), substitute_vars(e->b, subs));
    }
    return e;
}

// ---------------------------------------------------------------------------
// Evaluation
// ---------------------------------------------------------------------------

namespace {

bool jet_is_constant(const Jet3& j) {
    for (int i = 0; i < 4; ++i) {
        if (j.g[i] != 0.0) return false;
        for (int k = 0; k < 4; ++k) {
            if (j.h[i][k] != 0.0) return false;
            for (int m = 0; m < 4; ++m)
                if (j.t[i][k][m] != 0.0) return false;
        }
    }
    return true;
}

Jet3 apply_func(Func f, const Jet3& a) {
    switch (f) {
        case Func::Exp: return jet_exp(a);
        case Func::Log: return jet_log(a);
        case Func::Sqrt: return jet_sqrt(a);
        case Func::Sin: return jet_sin(a);
        case Func::Cos: return jet_cos(a);
        case Func::Tan: return jet_tan(a);
        case Func::Sec: return jet_sec(a);
        case Func::Sinh: return jet_sinh(a);
        case Func::Cosh: return jet_cosh(a);
    }
    throw DomainError("unreachable function dispatch");
}

}  // namespace

Jet3 eval_jet(const Expr& e, const std::array<double, 4>& point, const ParamEnv& env) {
    switch (e->kind) {
        case ExprKind::Num: return Jet3::constant(e->num);
        case ExprKind::ConstSym: return Jet3::constant(e->num);
        case ExprKind::Var: return Jet3::variable(e->slot, point[e->slot]);
        case ExprKind::Param: {
            auto it = env.find(e->name);
            if (it == env.end()) throw UnboundParam(e->name);
            return Jet3::constant(it->second);
        }
        case ExprKind::Neg: return -eval_jet(e->a, point, env);
        case ExprKind::Add: return eval_jet(e->a, point, env) + eval_jet(e->b, point, env);
        case ExprKind::Sub: return eval_jet(e->a, point, env) - eval_jet(e->b, point, env);
        case ExprKind::Mul: return eval_jet(e->a, point, env) * eval_jet(e->b, point, env);
        case ExprKind::Div: return eval_jet(e->a, point, env) / eval_jet(e->b, point, env);
        case ExprKind::Pow: {
            Jet3 base = eval_jet(e->a, point, env);
            Jet3 expo = eval_jet(e->b, point, env);
            double n = std::round(expo.v);
            if (jet_is_constant(expo) && std::abs(expo.v - n) < 1e-9 && std::abs(n) <= 64.0)
                return jet_powi(base, static_cast<long>(n));
            return jet_exp(expo * jet_log(base));
        }
        case ExprKind::Call: return apply_func(e->func, eval_jet(e->a, point, env));
    }
    throw DomainError("unreachable expr dispatch");
}

double eval_value(const Expr& e, const std::array<double, 4>& point, const ParamEnv& env) {
    return eval_jet(e, point, env).v;
}

namespace {

// Nested central differences along the index list.
double fd_rec(const Expr& e, std::array<double, 4> p, const ParamEnv& env, double h,
              const std::vector<int>& idx, size_t depth) {
    if (depth == idx.size()) return eval_value(e, p, env);
    int i = idx[depth];
    std::array<double, 4> pp = p, pm = p;
    pp[i] += h;
    pm[i] -= h;
    return (fd_rec(e, pp, env, h, idx, depth + 1) - fd_rec(e, pm, env, h, idx, depth + 1)) /
           (2.0 * h);
}

}  // namespace

Jet3 finite_diff_jet(const Expr& e, const std::array<double, 4>& point, const ParamEnv& env,
                     double h) {
    if (!(h >= 1e-5 && h <= 1e-2)) throw DomainError("finite_diff_jet: h outside [1e-5, 1e-2]");
    Jet3 r;
    r.v = eval_value(e, point, env);
    for (int i = 0; i < 4; ++i) r.g[i] = fd_rec(e, point, env, h, {i}, 0);
    for (int i = 0; i < 4; ++i)
        for (int j = i; j < 4; ++j) {
            double d = fd_rec(e, point, env, h, {i, j}, 0);
            r.h[i][j] = r.h[j][i] = d;
        }
    for (int i = 0; i < 4; ++i)
        for (int j = i; j < 4; ++j)
            for (int k = j; k < 4; ++k) {
                double d = fd_rec(e, point, env, h, {i, j, k}, 0);
                r.t[i][j][k] = r.t[i][k][j] = r.t[j][i][k] = r.t[j][k][i] = r.t[k][i][j] =
                    r.t[k][j][i] = d;
            }
    return r;
}

}  // namespace gsym
