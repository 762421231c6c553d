#include <random>
#include <string>
#include <vector>

#include "doctest.h"

#include "hirz/error.hpp"
#include "hirz/expr.hpp"
#include "hirz/ktheory.hpp"
#include "hirz/workspace.hpp"

using hirz::ChowClass;
using hirz::Expr;
using hirz::ExprKind;
using hirz::ExprType;
using hirz::Integer;
using hirz::Rational;
using hirz::TrackedBundle;
using hirz::Workspace;
using nlohmann::ordered_json;

namespace {

Rational scalar(const std::string& text, int n, const Workspace* ws = nullptr) {
    return std::get<Rational>(hirz::evaluate(hirz::parse_expr(text), n, ws));
}

ChowClass chow(const std::string& text, int n, const Workspace* ws = nullptr) {
    return std::get<ChowClass>(hirz::evaluate(hirz::parse_expr(text), n, ws));
}

TrackedBundle bundle(const std::string& text, int n, const Workspace* ws = nullptr) {
    return std::get<TrackedBundle>(hirz::evaluate(hirz::parse_expr(text), n, ws));
}

void check_parse_error(const std::string& text, std::size_t pos, const std::string& expected) {
    CAPTURE(text);
    try {
        hirz::parse_expr(text);
        FAIL("no parse error for ", text);
    } catch (const hirz::ParseError& e) {
        CHECK(e.position == pos);
        CHECK(e.expected == expected);
    }
}

}  // namespace

TEST_CASE("scalar evaluation") {
    CHECK(scalar("chi(O(3))", 2) == Rational(10));
    CHECK(scalar("integral(ch(O(3)) * td(T))", 2) == Rational(10));
    CHECK(scalar("chi(dual(O(4)))", 3) == Rational(-1));
    CHECK(scalar("degree(det(sum(O(1), O(2))))", 2) == Rational(3));
    CHECK(scalar("rank(wedge(2, sum(O(1), O(1), O(1))))", 2) == Rational(3));
    CHECK(scalar("chi(sum(O(1), O(2)))", 1) == Rational(5));
    CHECK(scalar("chi(tensor(O(1), O(2)))", 2) == Rational(10));
    CHECK(scalar("2 + 3 * 4", 1) == Rational(14));
    CHECK(scalar("integral(td(T))", 5) == Rational(1));
    CHECK(scalar("rank(sym(2, sum(O(1), O(-1))))", 3) == Rational(3));
}

TEST_CASE("chow evaluation") {
    const ChowClass c = chow("c(T)", 2);
    CHECK(c.part(0) == Rational(1));
    CHECK(c.part(1) == Rational(3));
    CHECK(c.part(2) == Rational(3));
    CHECK(chow("ch(O(1)) * ch(O(-1))", 4) == ChowClass::unit(4));
    CHECK(chow("segre(T) * c(T)", 3) == ChowClass::unit(3));
    const ChowClass s = chow("2 * ch(O(1))", 2);
    CHECK(s.part(0) == Rational(2));
    CHECK(s.part(1) == Rational(2));
    CHECK(chow("ch(sum(O(1), O(2))) - ch(O(1)) - ch(O(2))", 3) == ChowClass(3));
}

TEST_CASE("bundle evaluation carries tracking") {
    CHECK(bundle("sum(O(1), O(2))", 2).kclass.has_value());
    CHECK(bundle("dual(tensor(O(1), O(3)))", 2).kclass.has_value());
    CHECK(!bundle("T", 2).kclass.has_value());
    CHECK(!bundle("wedge(2, sum(O(1), O(2), O(3)))", 2).kclass.has_value());
    CHECK(!bundle("det(sum(O(1), O(2)))", 2).kclass.has_value());
    CHECK(bundle("O(5)", 3).bundle.rank() == 1);
}

TEST_CASE("unsupported chi reports the failing position") {
    try {
        hirz::evaluate(hirz::parse_expr("2 + chi(T)"), 2);
        FAIL("chi of an untracked bundle should not evaluate");
    } catch (const hirz::UnsupportedError& e) {
        const std::string msg = e.what();
        CHECK(msg.find("(at position 5)") != std::string::npos);
    }
}

TEST_CASE("type errors") {
    CHECK_THROWS_AS(hirz::evaluate(hirz::parse_expr("integral(O(1))"), 2), hirz::DomainError);
    CHECK_THROWS_AS(hirz::evaluate(hirz::parse_expr("ch(3)"), 2), hirz::DomainError);
    CHECK_THROWS_AS(hirz::evaluate(hirz::parse_expr("O(1) + O(2)"), 2), hirz::DomainError);
    CHECK_THROWS_AS(hirz::evaluate(hirz::parse_expr("sum(1, O(1))"), 2), hirz::DomainError);
    CHECK_THROWS_AS(hirz::evaluate(hirz::parse_expr("1 + ch(O(1))"), 2), hirz::DomainError);
    CHECK_THROWS_AS(hirz::evaluate(hirz::parse_expr("chi(ch(O(1)))"), 2), hirz::DomainError);
    CHECK_THROWS_AS(hirz::evaluate(hirz::parse_expr("wedge(-1, O(1))"), 2), hirz::DomainError);
    CHECK(hirz::type_check(hirz::parse_expr("wedge(2, T)")) == ExprType::Bundle);
    CHECK(hirz::type_check(hirz::parse_expr("2 * ch(O(1))")) == ExprType::Chow);
    CHECK(hirz::type_check(hirz::parse_expr("chi(E)")) == ExprType::Scalar);
}

TEST_CASE("parse error positions") {
    check_parse_error("chi(O(3)", 9, "',' or ')'");
    check_parse_error("frob(2)", 1, "a known function name ('frob' is not one)");
    check_parse_error("T(2)", 1, "'T' without an argument list");
    check_parse_error("wedge(O(1), 2)", 7, "an integer literal");
    check_parse_error("", 1, "an expression");
    check_parse_error("2 +", 4, "an expression");
    check_parse_error("chi O(3)", 1, "'(' after 'chi'");
    check_parse_error("1 2", 3, "'+', '-', '*' or end of input");
    check_parse_error("sum(O(1))", 1, "at least two arguments to 'sum'");
    check_parse_error("tensor(O(1), O(2), O(3))", 1, "exactly two arguments to 'tensor'");
    check_parse_error("(O(1)", 6, "')'");
    check_parse_error("O(x)", 3, "an integer literal");
    check_parse_error("ch()", 1, "exactly one argument to 'ch'");
    check_parse_error("dual(", 6, "an expression");
}

TEST_CASE("ambient must be positive") {
    CHECK_THROWS_AS(hirz::evaluate(hirz::parse_expr("chi(O(1))"), 0), hirz::DomainError);
}

TEST_CASE("printing") {
    CHECK(hirz::print_expr(hirz::parse_expr("  chi( O( 3 ) ) ")) == "chi(O(3))");
    CHECK(hirz::print_expr(hirz::parse_expr("1+2*3-4")) == "1 + 2 * 3 - 4");
    CHECK(hirz::print_expr(hirz::parse_expr("(1+2)*3")) == "(1 + 2) * 3");
    CHECK(hirz::print_expr(hirz::parse_expr("1-(2-3)")) == "1 - (2 - 3)");
    CHECK(hirz::print_expr(hirz::parse_expr("sum(O(-1),T,dual(E))")) ==
          "sum(O(-1), T, dual(E))");
    CHECK(hirz::print_expr(hirz::parse_expr("wedge(2,sum(O(1),O(2),O(3)))")) ==
          "wedge(2, sum(O(1), O(2), O(3)))");
}

namespace {

Expr rnd_expr(std::mt19937_64& rng, int depth) {
    const auto pick = [&rng](int m) { return static_cast<int>(rng() % m); };
    Expr e;
    if (depth == 0 || pick(4) == 0) {
        switch (pick(4)) {
            case 0:
                e.kind = ExprKind::IntLit;
                e.value = pick(19) - 9;
                break;
            case 1:
                e.kind = ExprKind::Name;
                e.name = pick(2) == 0 ? "E" : "some_name2";
                break;
            case 2:
                e.kind = ExprKind::LineBundle;
                e.value = pick(19) - 9;
                break;
            default:
                e.kind = ExprKind::Tangent;
                break;
        }
        return e;
    }
    static const ExprKind inner[] = {
        ExprKind::Sum,     ExprKind::Tensor, ExprKind::Dual,     ExprKind::Det,
        ExprKind::Wedge,   ExprKind::Sym,    ExprKind::Ch,       ExprKind::Td,
        ExprKind::TotalChern, ExprKind::Segre, ExprKind::Chi,    ExprKind::Integral,
        ExprKind::Rank,    ExprKind::Degree, ExprKind::Add,      ExprKind::Sub,
        ExprKind::Mul,
    };
    e.kind = inner[pick(static_cast<int>(std::size(inner)))];
    int nargs = 1;
    if (e.kind == ExprKind::Sum) nargs = 2 + pick(2);
    if (e.kind == ExprKind::Tensor || e.kind == ExprKind::Add || e.kind == ExprKind::Sub ||
        e.kind == ExprKind::Mul)
        nargs = 2;
    if (e.kind == ExprKind::Wedge || e.kind == ExprKind::Sym) e.value = pick(6) - 1;
    for (int i = 0; i < nargs; ++i) e.args.push_back(rnd_expr(rng, depth - 1));
    return e;
}

}  // namespace

TEST_CASE("print/parse round-trip on random trees") {
    std::mt19937_64 rng(52711);
    for (int trial = 0; trial < 200; ++trial) {
        const Expr e = rnd_expr(rng, 1 + static_cast<int>(rng() % 5));
        const std::string text = hirz::print_expr(e);
        CAPTURE(text);
        const Expr back = hirz::parse_expr(text);
        CHECK(back == e);
        CHECK(hirz::print_expr(back) == text);
    }
}

namespace {

const char* kWorkspaceDoc = R"({
  "version": 1,
  "ambient": 2,
  "bundles": [
    {"name": "L", "line": 3},
    {"name": "E", "sum-of-lines": [1, 2]},
    {"name": "Q", "rank": 2, "chern": ["1", "3", "3"]}
  ],
  "surfaces": [
    {"name": "plane", "basis": ["H"], "pairing": [[1]], "canonical": [-3], "c2": 3}
  ],
  "curves": [
    {"name": "conic", "genus": 0}
  ]
})";

}  // namespace

TEST_CASE("workspace round-trip") {
    const ordered_json doc = ordered_json::parse(kWorkspaceDoc);
    const Workspace ws = Workspace::from_json(doc);
    CHECK(ws.ambient() == 2);
    CHECK(ws.to_json() == doc);
    CHECK(ws.to_json().dump(2) == doc.dump(2));
    CHECK(ws.find_bundle("L") != nullptr);
    CHECK(ws.find_bundle("missing") == nullptr);
    REQUIRE(ws.surfaces().size() == 1);
    CHECK(ws.surfaces()[0].first == "plane");
    CHECK(hirz::noether_chi(ws.surfaces()[0].second) == Integer(1));
    REQUIRE(ws.curves().size() == 1);
    CHECK(hirz::curve_chi(ws.curves()[0].second, 1, 4) == Integer(5));
}

TEST_CASE("workspace evaluation") {
    const Workspace ws = Workspace::from_json(ordered_json::parse(kWorkspaceDoc));
    CHECK(scalar("chi(L)", 2, &ws) == Rational(10));
    CHECK(scalar("chi(E)", 2, &ws) == Rational(9));
    CHECK(scalar("chi(tensor(L, L))", 2, &ws) == Rational(28));
    CHECK(scalar("rank(Q)", 2, &ws) == Rational(2));
    const ChowClass cq = chow("c(Q)", 2, &ws);
    CHECK(cq.part(1) == Rational(3));
    CHECK_THROWS_AS(scalar("chi(Q)", 2, &ws), hirz::UnsupportedError);
    CHECK_THROWS_AS(scalar("chi(X)", 2, &ws), hirz::DomainError);
    CHECK_THROWS_AS(scalar("chi(L)", 3, &ws), hirz::DomainError);  // ambient mismatch
    CHECK_THROWS_AS(scalar("chi(L)", 2, nullptr), hirz::DomainError);
}

TEST_CASE("workspace validation") {
    const auto reject = [](const char* text) {
        CHECK_THROWS_AS(Workspace::from_json(ordered_json::parse(text)), hirz::DomainError);
    };
    reject(R"({"version": 2, "ambient": 2})");
    reject(R"({"ambient": 2})");
    reject(R"({"version": 1})");
    reject(R"({"version": 1, "ambient": 0})");
    reject(R"({"version": 1, "ambient": 2, "bundles": [{"name": "A", "line": 1}, {"name": "A", "line": 2}]})");
    reject(R"({"version": 1, "ambient": 2, "bundles": [{"name": "A"}]})");
    reject(R"({"version": 1, "ambient": 2, "bundles": [{"name": "A", "sum-of-lines": []}]})");
    reject(R"({"version": 1, "ambient": 2, "bundles": [{"name": "A", "rank": 1, "chern": ["2", "1"]}]})");
    reject(R"({"version": 1, "ambient": 2, "bundles": [{"name": "A", "rank": 1, "chern": ["1", "0", "0", "5"]}]})");
    reject(R"({"version": 1, "ambient": 2, "curves": [{"name": "C", "genus": -1}]})");
    // surface with K^2 + c2 not divisible by 12
    CHECK_THROWS_AS(
        Workspace::from_json(ordered_json::parse(
            R"({"version": 1, "ambient": 2, "surfaces": [{"name": "S", "basis": ["H"], "pairing": [[1]], "canonical": [-3], "c2": 4}]})")),
        hirz::InconsistentContextError);
}
