#include "hirz/expr.hpp"

#include <cctype>
#include <map>
#include <string>
#include <utility>

#include "hirz/error.hpp"
#include "hirz/ktheory.hpp"
#include "hirz/workspace.hpp"

namespace hirz {

namespace {

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }
bool is_ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_';
}

// Builtins taking exactly one bundle-or-class argument.
const std::map<std::string, ExprKind, std::less<>> kUnaryCalls = {
    {"dual", ExprKind::Dual},         {"det", ExprKind::Det},
    {"ch", ExprKind::Ch},             {"td", ExprKind::Td},
    {"c", ExprKind::TotalChern},      {"segre", ExprKind::Segre},
    {"chi", ExprKind::Chi},           {"integral", ExprKind::Integral},
    {"rank", ExprKind::Rank},         {"degree", ExprKind::Degree},
};

bool is_builtin_name(const std::string& s) {
    return s == "O" || s == "T" || s == "sum" || s == "tensor" || s == "wedge" ||
           s == "sym" || kUnaryCalls.count(s) > 0;
}

Expr node(ExprKind kind, std::size_t pos) {
    Expr e;
    e.kind = kind;
    e.pos = pos;
    return e;
}

class ExprParser {
  public:
    explicit ExprParser(std::string_view text) : s_(text) {}

    Expr run() {
        Expr e = parse_sum();
        if (peek() != '\0') fail("'+', '-', '*' or end of input");
        return e;
    }

  private:
    std::string_view s_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& expected) const { fail_at(pos_, expected); }

    [[noreturn]] void fail_at(std::size_t pos, const std::string& expected) const {
        throw ParseError(pos + 1, expected,
                         "parse error at position " + std::to_string(pos + 1) +
                             ": expected " + expected);
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])) != 0)
            ++pos_;
    }

    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    bool eat(char c) {
        if (peek() != c) return false;
        ++pos_;
        return true;
    }

    Expr parse_sum() {
        Expr e = parse_product();
        while (true) {
            ExprKind k;
            if (eat('+'))
                k = ExprKind::Add;
            else if (eat('-'))
                k = ExprKind::Sub;
            else
                return e;
            Expr n = node(k, e.pos);
            n.args.push_back(std::move(e));
            n.args.push_back(parse_product());
            e = std::move(n);
        }
    }

    Expr parse_product() {
        Expr e = parse_atom();
        while (eat('*')) {
            Expr n = node(ExprKind::Mul, e.pos);
            n.args.push_back(std::move(e));
            n.args.push_back(parse_atom());
            e = std::move(n);
        }
        return e;
    }

    Expr parse_atom() {
        const char c = peek();
        const std::size_t at = pos_;
        if (c == '(') {
            ++pos_;
            Expr e = parse_sum();
            if (!eat(')')) fail("')'");
            return e;
        }
        if (c == '-' || std::isdigit(static_cast<unsigned char>(c)) != 0)
            return parse_literal();
        if (is_ident_start(c)) {
            std::string ident;
            while (pos_ < s_.size() && is_ident_char(s_[pos_])) ident += s_[pos_++];
            if (peek() == '(') return parse_call(ident, at);
            if (ident == "T") return node(ExprKind::Tangent, at + 1);
            if (is_builtin_name(ident)) fail_at(at, "'(' after '" + ident + "'");
            Expr e = node(ExprKind::Name, at + 1);
            e.name = std::move(ident);
            return e;
        }
        fail("an expression");
    }

    Expr parse_literal() {
        const std::size_t at = pos_;
        std::string digits;
        if (s_[pos_] == '-') {
            digits += '-';
            ++pos_;
        }
        if (pos_ >= s_.size() || std::isdigit(static_cast<unsigned char>(s_[pos_])) == 0)
            fail("an integer literal");
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])) != 0)
            digits += s_[pos_++];
        Expr e = node(ExprKind::IntLit, at + 1);
        e.value = Integer(digits, 10);
        return e;
    }

    Expr parse_call(const std::string& ident, std::size_t at) {
        eat('(');
        std::vector<Expr> args;
        if (!eat(')')) {
            args.push_back(parse_sum());
            while (eat(',')) args.push_back(parse_sum());
            if (!eat(')')) fail("',' or ')'");
        }
        if (ident == "T") fail_at(at, "'T' without an argument list");
        if (ident == "O") {
            if (args.size() != 1) fail_at(at, "exactly one argument to 'O'");
            if (args[0].kind != ExprKind::IntLit)
                fail_at(args[0].pos - 1, "an integer literal");
            Expr e = node(ExprKind::LineBundle, at + 1);
            e.value = args[0].value;
            return e;
        }
        if (ident == "sum") {
            if (args.size() < 2) fail_at(at, "at least two arguments to 'sum'");
            Expr e = node(ExprKind::Sum, at + 1);
            e.args = std::move(args);
            return e;
        }
        if (ident == "tensor") {
            if (args.size() != 2) fail_at(at, "exactly two arguments to 'tensor'");
            Expr e = node(ExprKind::Tensor, at + 1);
            e.args = std::move(args);
            return e;
        }
        if (ident == "wedge" || ident == "sym") {
            if (args.size() != 2) fail_at(at, "exactly two arguments to '" + ident + "'");
            if (args[0].kind != ExprKind::IntLit)
                fail_at(args[0].pos - 1, "an integer literal");
            Expr e = node(ident == "wedge" ? ExprKind::Wedge : ExprKind::Sym, at + 1);
            e.value = args[0].value;
            e.args.push_back(std::move(args[1]));
            return e;
        }
        auto it = kUnaryCalls.find(ident);
        if (it != kUnaryCalls.end()) {
            if (args.size() != 1) fail_at(at, "exactly one argument to '" + ident + "'");
            Expr e = node(it->second, at + 1);
            e.args = std::move(args);
            return e;
        }
        fail_at(at, "a known function name ('" + ident + "' is not one)");
    }
};

int precedence(ExprKind k) {
    switch (k) {
        case ExprKind::Add:
        case ExprKind::Sub:
            return 1;
        case ExprKind::Mul:
            return 2;
        default:
            return 3;
    }
}

void print_to(const Expr& e, std::string& out);

void print_child(const Expr& parent, const Expr& child, bool right, std::string& out) {
    const int pp = precedence(parent.kind);
    const int cp = precedence(child.kind);
    const bool paren = cp < pp || (cp == pp && right);
    if (paren) out += '(';
    print_to(child, out);
    if (paren) out += ')';
}

void print_call(const char* name, const Expr& e, std::string& out) {
    out += name;
    out += '(';
    for (std::size_t i = 0; i < e.args.size(); ++i) {
        if (i > 0) out += ", ";
        print_to(e.args[i], out);
    }
    out += ')';
}

void print_to(const Expr& e, std::string& out) {
    switch (e.kind) {
        case ExprKind::IntLit:
            out += e.value.get_str();
            return;
        case ExprKind::Name:
            out += e.name;
            return;
        case ExprKind::LineBundle:
            out += "O(" + e.value.get_str() + ")";
            return;
        case ExprKind::Tangent:
            out += 'T';
            return;
        case ExprKind::Sum:
            print_call("sum", e, out);
            return;
        case ExprKind::Tensor:
            print_call("tensor", e, out);
            return;
        case ExprKind::Dual:
            print_call("dual", e, out);
            return;
        case ExprKind::Det:
            print_call("det", e, out);
            return;
        case ExprKind::Wedge:
        case ExprKind::Sym:
            out += e.kind == ExprKind::Wedge ? "wedge(" : "sym(";
            out += e.value.get_str();
            out += ", ";
            print_to(e.args[0], out);
            out += ')';
            return;
        case ExprKind::Ch:
            print_call("ch", e, out);
            return;
        case ExprKind::Td:
            print_call("td", e, out);
            return;
        case ExprKind::TotalChern:
            print_call("c", e, out);
            return;
        case ExprKind::Segre:
            print_call("segre", e, out);
            return;
        case ExprKind::Chi:
            print_call("chi", e, out);
            return;
        case ExprKind::Integral:
            print_call("integral", e, out);
            return;
        case ExprKind::Rank:
            print_call("rank", e, out);
            return;
        case ExprKind::Degree:
            print_call("degree", e, out);
            return;
        case ExprKind::Add:
        case ExprKind::Sub:
        case ExprKind::Mul: {
            print_child(e, e.args[0], false, out);
            out += e.kind == ExprKind::Add ? " + " : e.kind == ExprKind::Sub ? " - " : " * ";
            print_child(e, e.args[1], true, out);
            return;
        }
    }
}

[[noreturn]] void type_fail(const Expr& e, const std::string& msg) {
    throw DomainError("type error at position " + std::to_string(e.pos) + ": " + msg);
}

const char* describe(ExprType t) {
    switch (t) {
        case ExprType::Bundle:
            return "a bundle";
        case ExprType::Chow:
            return "a class";
        default:
            return "a scalar";
    }
}

// Resource limits for wedge/sym so a short expression cannot demand an
// astronomically large root expansion.
constexpr long kMaxExpansionTerms = 20000;

long small_binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Integer acc = 1;
    for (long i = 1; i <= k; ++i) {
        acc *= n - k + i;
        acc /= i;
        if (!acc.fits_slong_p()) return kMaxExpansionTerms + 1;
    }
    return acc.get_si();
}

class Evaluator {
  public:
    Evaluator(int ambient, const Workspace* ws) : n_(ambient), ws_(ws) {}

    Value eval(const Expr& e) {
        try {
            return dispatch(e);
        } catch (const ParseError&) {
            throw;
        } catch (const InternalError&) {
            throw;
        } catch (const UnsupportedError& err) {
            throw UnsupportedError(annotate(err.what(), e.pos));
        } catch (const InconsistentContextError& err) {
            throw InconsistentContextError(annotate(err.what(), e.pos));
        } catch (const DomainError& err) {
            throw DomainError(annotate(err.what(), e.pos));
        } catch (const Error& err) {
            throw Error(annotate(err.what(), e.pos));
        }
    }

  private:
    int n_;
    const Workspace* ws_;

    // Deepest node wins: if an inner eval already appended a position, keep it.
    static std::string annotate(const std::string& msg, std::size_t pos) {
        if (pos == 0 || msg.find(" (at position ") != std::string::npos) return msg;
        return msg + " (at position " + std::to_string(pos) + ")";
    }

    TrackedBundle bundle_arg(const Expr& e) { return std::get<TrackedBundle>(eval(e)); }

    ChowClass chow_arg(const Expr& e) {
        Value v = eval(e);
        if (std::holds_alternative<ChowClass>(v)) return std::get<ChowClass>(v);
        ChowClass out = ChowClass::unit(n_);
        out.set_part(0, std::get<Rational>(v));
        return out;
    }

    Value dispatch(const Expr& e) {
        switch (e.kind) {
            case ExprKind::IntLit:
                return Rational(e.value);
            case ExprKind::Name:
                return lookup(e);
            case ExprKind::LineBundle:
                return tracked_line(n_, e.value);
            case ExprKind::Tangent:
                return TrackedBundle(tangent_bundle(n_));
            case ExprKind::Sum: {
                TrackedBundle acc = bundle_arg(e.args[0]);
                for (std::size_t i = 1; i < e.args.size(); ++i)
                    acc = tracked_sum(acc, bundle_arg(e.args[i]));
                return acc;
            }
            case ExprKind::Tensor:
                return tracked_tensor(bundle_arg(e.args[0]), bundle_arg(e.args[1]));
            case ExprKind::Dual:
                return tracked_dual(bundle_arg(e.args[0]));
            case ExprKind::Det:
                return TrackedBundle(determinant(bundle_arg(e.args[0]).bundle));
            case ExprKind::Wedge: {
                const BundleClass b = bundle_arg(e.args[0]).bundle;
                long k = e.value.fits_slong_p() ? e.value.get_si() : b.rank() + 1L;
                if (k > b.rank()) k = b.rank() + 1L;
                if (small_binomial(b.rank(), k) > kMaxExpansionTerms)
                    throw UnsupportedError("wedge(" + e.value.get_str() +
                                           ", -) expansion is too large");
                return TrackedBundle(wedge(static_cast<int>(k), b));
            }
            case ExprKind::Sym: {
                const BundleClass b = bundle_arg(e.args[0]).bundle;
                if (!e.value.fits_slong_p() || e.value.get_si() > 100000)
                    throw UnsupportedError("sym(" + e.value.get_str() +
                                           ", -) expansion is too large");
                const long k = e.value.get_si();
                if (small_binomial(k + b.rank() - 1, b.rank() - 1) > kMaxExpansionTerms)
                    throw UnsupportedError("sym(" + e.value.get_str() +
                                           ", -) expansion is too large");
                return TrackedBundle(sym(static_cast<int>(k), b));
            }
            case ExprKind::Ch:
                return chern_character(bundle_arg(e.args[0]).bundle);
            case ExprKind::Td:
                return todd(bundle_arg(e.args[0]).bundle);
            case ExprKind::TotalChern:
                return bundle_arg(e.args[0]).bundle.chern();
            case ExprKind::Segre:
                return segre(bundle_arg(e.args[0]).bundle);
            case ExprKind::Chi: {
                const TrackedBundle b = bundle_arg(e.args[0]);
                if (!b.kclass)
                    throw UnsupportedError(
                        "chi needs a bundle with a tracked K-theory class (built from "
                        "line bundles by sum, tensor and dual)");
                return Rational(euler_char(*b.kclass));
            }
            case ExprKind::Integral:
                return chow_arg(e.args[0]).integral();
            case ExprKind::Rank:
                return Rational(bundle_arg(e.args[0]).bundle.rank());
            case ExprKind::Degree:
                return degree(bundle_arg(e.args[0]).bundle);
            case ExprKind::Add:
            case ExprKind::Sub:
            case ExprKind::Mul:
                return arith(e);
        }
        throw InternalError("unhandled expression kind");
    }

    Value lookup(const Expr& e) {
        if (ws_ == nullptr)
            throw DomainError("no workspace loaded: unknown name '" + e.name + "'");
        const TrackedBundle* b = ws_->find_bundle(e.name);
        if (b == nullptr) throw DomainError("unknown bundle '" + e.name + "'");
        if (b->bundle.ambient() != n_)
            throw DomainError("bundle '" + e.name + "' lives on an ambient of dimension " +
                              std::to_string(b->bundle.ambient()) + ", not " +
                              std::to_string(n_));
        return *b;
    }

    Value arith(const Expr& e) {
        Value l = eval(e.args[0]);
        Value r = eval(e.args[1]);
        const bool ls = std::holds_alternative<Rational>(l);
        const bool rs = std::holds_alternative<Rational>(r);
        if (e.kind == ExprKind::Mul) {
            if (ls && rs) return std::get<Rational>(l) * std::get<Rational>(r);
            if (ls) return std::get<Rational>(l) * std::get<ChowClass>(r);
            if (rs) return std::get<Rational>(r) * std::get<ChowClass>(l);
            return std::get<ChowClass>(l) * std::get<ChowClass>(r);
        }
        if (ls) {
            const Rational a = std::get<Rational>(l);
            const Rational b = std::get<Rational>(r);
            return e.kind == ExprKind::Add ? a + b : a - b;
        }
        const ChowClass a = std::get<ChowClass>(l);
        const ChowClass b = std::get<ChowClass>(r);
        return e.kind == ExprKind::Add ? a + b : a - b;
    }
};

}  // namespace

Expr parse_expr(std::string_view text) { return ExprParser(text).run(); }

std::string print_expr(const Expr& e) {
    std::string out;
    print_to(e, out);
    return out;
}

ExprType type_check(const Expr& e) {
    switch (e.kind) {
        case ExprKind::IntLit:
            return ExprType::Scalar;
        case ExprKind::Name:
        case ExprKind::LineBundle:
        case ExprKind::Tangent:
            return ExprType::Bundle;
        case ExprKind::Sum:
        case ExprKind::Tensor:
            for (const Expr& a : e.args)
                if (type_check(a) != ExprType::Bundle)
                    type_fail(a, std::string(e.kind == ExprKind::Sum ? "'sum'" : "'tensor'") +
                                     " expects bundle arguments, got " +
                                     describe(type_check(a)));
            return ExprType::Bundle;
        case ExprKind::Dual:
        case ExprKind::Det:
            if (type_check(e.args[0]) != ExprType::Bundle)
                type_fail(e.args[0],
                          std::string(e.kind == ExprKind::Dual ? "'dual'" : "'det'") +
                              " expects a bundle, got " + describe(type_check(e.args[0])));
            return ExprType::Bundle;
        case ExprKind::Wedge:
        case ExprKind::Sym:
            if (e.value < 0)
                type_fail(e, std::string(e.kind == ExprKind::Wedge ? "'wedge'" : "'sym'") +
                                 " needs a nonnegative index, got " + e.value.get_str());
            if (type_check(e.args[0]) != ExprType::Bundle)
                type_fail(e.args[0],
                          std::string(e.kind == ExprKind::Wedge ? "'wedge'" : "'sym'") +
                              " expects a bundle, got " + describe(type_check(e.args[0])));
            return ExprType::Bundle;
        case ExprKind::Ch:
        case ExprKind::Td:
        case ExprKind::TotalChern:
        case ExprKind::Segre:
            if (type_check(e.args[0]) != ExprType::Bundle)
                type_fail(e.args[0], "this operation expects a bundle, got " +
                                         std::string(describe(type_check(e.args[0]))));
            return ExprType::Chow;
        case ExprKind::Chi:
        case ExprKind::Rank:
        case ExprKind::Degree:
            if (type_check(e.args[0]) != ExprType::Bundle)
                type_fail(e.args[0], "this operation expects a bundle, got " +
                                         std::string(describe(type_check(e.args[0]))));
            return ExprType::Scalar;
        case ExprKind::Integral: {
            const ExprType t = type_check(e.args[0]);
            if (t == ExprType::Bundle)
                type_fail(e.args[0], "'integral' expects a class, got a bundle");
            return ExprType::Scalar;
        }
        case ExprKind::Add:
        case ExprKind::Sub:
        case ExprKind::Mul: {
            const ExprType lt = type_check(e.args[0]);
            const ExprType rt = type_check(e.args[1]);
            const char* op = e.kind == ExprKind::Add ? "'+'"
                             : e.kind == ExprKind::Sub ? "'-'"
                                                       : "'*'";
            if (lt == ExprType::Bundle || rt == ExprType::Bundle)
                type_fail(e, std::string(op) +
                                 " does not apply to bundles (use sum/tensor, or take "
                                 "ch/c/td first)");
            if (e.kind == ExprKind::Mul)
                return lt == ExprType::Chow || rt == ExprType::Chow ? ExprType::Chow
                                                                    : ExprType::Scalar;
            if (lt != rt)
                type_fail(e, std::string(op) + " needs matching operands, got " +
                                 describe(lt) + " and " + describe(rt));
            return lt;
        }
    }
    throw InternalError("unhandled expression kind");
}

Value evaluate(const Expr& e, int ambient, const Workspace* ws) {
    if (ambient < 1) throw DomainError("ambient dimension must be at least 1");
    type_check(e);
    return Evaluator(ambient, ws).eval(e);
}

}  // namespace hirz
