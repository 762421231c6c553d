#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "hirz/riemann_roch.hpp"

namespace hirz {

class Workspace;

enum class ExprKind {
    IntLit,      // value
    Name,        // name, resolved against the workspace at evaluation
    LineBundle,  // O(value)
    Tangent,     // T
    Sum,         // sum(...), two or more bundle arguments
    Tensor,
    Dual,
    Det,
    Wedge,  // wedge(value, arg)
    Sym,    // sym(value, arg)
    Ch,
    Td,
    TotalChern,  // c(arg)
    Segre,
    Chi,
    Integral,
    Rank,
    Degree,
    Add,  // infix on scalars and classes
    Sub,
    Mul,
};

// Parsed expression tree.  `pos` is the 1-based position of the node's first
// character in the source text; it is diagnostic only and ignored by ==.
struct Expr {
    ExprKind kind;
    Integer value;  // IntLit value, O twist, wedge/sym index
    std::string name;
    std::vector<Expr> args;
    std::size_t pos = 0;

    friend bool operator==(const Expr& a, const Expr& b) {
        return a.kind == b.kind && a.value == b.value && a.name == b.name && a.args == b.args;
    }
};

enum class ExprType { Bundle, Chow, Scalar };

// Function-call syntax over the bundle constructors, + - * on scalar- and
// Chow-valued subexpressions, integer literals with an optional sign.
// Unknown function names and wrong argument counts are parse errors.
Expr parse_expr(std::string_view text);

// Canonical rendering; parse_expr(print_expr(e)) == e.
std::string print_expr(const Expr& e);

// Infers the value category of every node, rejecting ill-typed trees and
// negative wedge/sym indices before any evaluation happens.
ExprType type_check(const Expr& e);

using Value = std::variant<Rational, ChowClass, TrackedBundle>;

// Type-checks, then evaluates on P^ambient.  Named references are looked up
// in the workspace when one is supplied.  Errors from the underlying algebra
// are annotated with the position of the subexpression that raised them.
Value evaluate(const Expr& e, int ambient, const Workspace* ws = nullptr);

}  // namespace hirz
