#pragma once

#include <array>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "gsym/jet.hpp"

namespace gsym {

/// Map from parameter name to value.  Every parameter appearing in an
/// expression must be bound before evaluation.
using ParamEnv = std::map<std::string, double>;

struct ParseError : std::runtime_error {
    size_t offset;
    ParseError(const std::string& what, size_t off)
        : std::runtime_error(what + " (at byte " + std::to_string(off) + ")"), offset(off) {}
};

struct UnboundParam : std::runtime_error {
    explicit UnboundParam(const std::string& name)
        : std::runtime_error("unbound parameter: " + name) {}
};

enum class ExprKind { Num, ConstSym, Var, Param, Neg, Add, Sub, Mul, Div, Pow, Call };

enum class Func { Exp, Log, Sqrt, Sin, Cos, Tan, Sec, Sinh, Cosh };

struct ExprNode;
using Expr = std::shared_ptr<const ExprNode>;

/// Immutable AST node.  Variables carry both the coordinate slot (0..3)
/// and the spelling they were written with, so printing round-trips.
struct ExprNode {
    ExprKind kind;
    double num = 0.0;          // Num
    std::string name;          // ConstSym / Var / Param
    int slot = -1;             // Var
    Func func = Func::Exp;     // Call
    Expr a, b;                 // children
};

// node builders
Expr ex_num(double v);
Expr ex_var(int slot);                       // canonical name x,y,u,v
Expr ex_var(int slot, const std::string&);   // keeps the given spelling
Expr ex_param(const std::string& name);
Expr ex_const(const std::string& name);      // "pi" or "e"
Expr ex_neg(Expr a);
Expr ex_add(Expr a, Expr b);
Expr ex_sub(Expr a, Expr b);
Expr ex_mul(Expr a, Expr b);
Expr ex_div(Expr a, Expr b);
Expr ex_pow(Expr a, Expr b);
Expr ex_call(Func f, Expr a);

/// Structural equality (kind, payload, children).
bool expr_equal(const Expr& a, const Expr& b);

/// Default variable-name table: x,y,u,v plus aliases x1,x2,y1,y2,z,t.
const std::map<std::string, int>& default_var_slots();

/// Parses the expression grammar.  `vars` maps variable spellings to
/// coordinate slots; identifiers that are neither variables, constants
/// nor function names become parameters, resolved at evaluation time.
Expr parse_expr(const std::string& source,
                const std::map<std::string, int>& vars = default_var_slots());

/// Prints with minimal parentheses; parse(print(e)) reproduces e.
std::string print_expr(const Expr& e);

/// Replaces every variable node by `subs[slot]`.  Used for linear
/// coordinate changes in the invariance tests.
Expr substitute_vars(const Expr& e, const std::array<Expr, 4>& subs);

/// Value and all partial derivatives up to order 3 at `point`,
/// via truncated Taylor arithmetic.
Jet3 eval_jet(const Expr& e, const std::array<double, 4>& point, const ParamEnv& env);

double eval_value(const Expr& e, const std::array<double, 4>& point, const ParamEnv& env);

/// Central-difference estimate of the same derivatives; test oracle only.
/// Requires h in [1e-5, 1e-2].
Jet3 finite_diff_jet(const Expr& e, const std::array<double, 4>& point, const ParamEnv& env,
                     double h);

}  // namespace gsym
