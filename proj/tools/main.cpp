#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <fmt/core.h>

#include "CLI11.hpp"
#include "json.hpp"

#include "hirz/error.hpp"
#include "hirz/expr.hpp"
#include "hirz/koszul.hpp"
#include "hirz/ktheory.hpp"
#include "hirz/riemann_roch.hpp"
#include "hirz/selfcheck.hpp"
#include "hirz/workspace.hpp"

namespace {

using nlohmann::ordered_json;

// Options shared by the subcommands.  `ambient` is meaningful only when
// `have_ambient` is set after parsing.
struct Common {
    int ambient = 0;
    bool have_ambient = false;
    std::string workspace_path;
    bool json = false;
};

void add_common(CLI::App* cmd, Common& c, bool with_ambient = true) {
    if (with_ambient) {
        CLI::Option* n = cmd->add_option("-n,--ambient", c.ambient,
                                         "dimension of the ambient projective space");
        cmd->callback([n, &c] { c.have_ambient = n->count() > 0; });
    }
    cmd->add_option("--workspace", c.workspace_path,
                    "JSON file with named bundles and contexts");
    cmd->add_flag("--json", c.json, "machine-readable JSON output");
}

std::optional<hirz::Workspace> load_workspace(const std::string& path) {
    if (path.empty()) return std::nullopt;
    std::ifstream in(path);
    if (!in) throw hirz::DomainError("cannot open workspace file '" + path + "'");
    ordered_json doc;
    try {
        doc = ordered_json::parse(in);
    } catch (const ordered_json::parse_error& e) {
        throw hirz::DomainError("workspace file '" + path +
                                "' is not valid JSON: " + e.what());
    }
    return hirz::Workspace::from_json(doc);
}

int resolve_ambient(const Common& c, const std::optional<hirz::Workspace>& ws) {
    if (ws && c.have_ambient && ws->ambient() != c.ambient)
        throw hirz::DomainError(
            fmt::format("workspace ambient dimension is {}, but -n {} was given",
                        ws->ambient(), c.ambient));
    if (c.have_ambient) return c.ambient;
    if (ws) return ws->ambient();
    throw hirz::DomainError("ambient dimension required: pass -n or --workspace");
}

void emit(const ordered_json& doc) { std::cout << doc.dump(2) << "\n"; }

ordered_json int_json(const hirz::Integer& v) {
    if (v.fits_slong_p()) return v.get_si();
    return v.get_str();
}

int cmd_eval(const Common& c, const std::string& text) {
    const auto ws = load_workspace(c.workspace_path);
    const int n = resolve_ambient(c, ws);
    const hirz::Expr e = hirz::parse_expr(text);
    const hirz::Value v = hirz::evaluate(e, n, ws ? &*ws : nullptr);
    if (std::holds_alternative<hirz::Rational>(v)) {
        const auto& r = std::get<hirz::Rational>(v);
        if (c.json)
            emit({{"type", "scalar"}, {"value", r.str()}});
        else
            fmt::print("{}\n", r.str());
        return 0;
    }
    if (std::holds_alternative<hirz::ChowClass>(v)) {
        const auto& cl = std::get<hirz::ChowClass>(v);
        if (c.json) {
            ordered_json coeffs = ordered_json::array();
            for (int k = 0; k <= n; ++k) coeffs.push_back(cl.part(k).str());
            emit({{"type", "chow"}, {"ambient", n}, {"coefficients", std::move(coeffs)}});
        } else {
            fmt::print("{}\n", cl.str());
        }
        return 0;
    }
    const auto& b = std::get<hirz::TrackedBundle>(v);
    if (c.json) {
        ordered_json chern = ordered_json::array();
        for (int k = 0; k <= n; ++k) chern.push_back(b.bundle.chern_coeff(k).str());
        ordered_json out = {{"type", "bundle"},
                            {"ambient", n},
                            {"rank", b.bundle.rank()},
                            {"chern", std::move(chern)},
                            {"tracked", b.kclass.has_value()}};
        if (b.kclass) {
            ordered_json kc = ordered_json::array();
            for (int k = 0; k <= n; ++k) kc.push_back(int_json(b.kclass->coeff(k)));
            out["k-coefficients"] = std::move(kc);
        }
        emit(out);
    } else {
        fmt::print("rank {} bundle on P^{}\n", b.bundle.rank(), n);
        fmt::print("c = {}\n", b.bundle.chern().str());
        if (b.kclass)
            fmt::print("k = {}\n", b.kclass->str());
        else
            fmt::print("k = (not tracked)\n");
    }
    return 0;
}

int cmd_hrr(const Common& c, const std::string& text) {
    const auto ws = load_workspace(c.workspace_path);
    const int n = resolve_ambient(c, ws);
    const hirz::Expr e = hirz::parse_expr(text);
    const hirz::Value v = hirz::evaluate(e, n, ws ? &*ws : nullptr);
    if (!std::holds_alternative<hirz::TrackedBundle>(v))
        throw hirz::DomainError("hrr needs a bundle-valued expression");
    const hirz::HrrReport r = hirz::hrr_check(std::get<hirz::TrackedBundle>(v));
    if (c.json) {
        emit({{"lhs", int_json(r.lhs)}, {"rhs", r.rhs.str()}, {"equal", r.equal}});
    } else {
        fmt::print("lhs = {}\n", r.lhs.get_str());
        fmt::print("rhs = {}\n", r.rhs.str());
        fmt::print("equal = {}\n", r.equal ? "true" : "false");
    }
    return 0;
}

int cmd_chi_table(const Common& c, long dmin, long dmax) {
    const auto ws = load_workspace(c.workspace_path);
    const int n = resolve_ambient(c, ws);
    if (dmin > dmax) throw hirz::DomainError("--dmin must not exceed --dmax");
    if (dmax - dmin > 10000) throw hirz::DomainError("chi-table range is too large");
    std::vector<std::pair<long, hirz::Integer>> rows;
    for (long d = dmin; d <= dmax; ++d)
        rows.emplace_back(d, hirz::euler_char(hirz::k_line(n, d)));
    if (c.json) {
        ordered_json jrows = ordered_json::array();
        for (const auto& [d, chi] : rows)
            jrows.push_back({{"d", d}, {"chi", int_json(chi)}});
        emit({{"ambient", n}, {"rows", std::move(jrows)}});
        return 0;
    }
    std::size_t wd = 1, wc = 3;
    for (const auto& [d, chi] : rows) {
        wd = std::max(wd, std::to_string(d).size());
        wc = std::max(wc, chi.get_str().size());
    }
    fmt::print("{:>{}}  {:>{}}\n", "d", wd, "chi", wc);
    for (const auto& [d, chi] : rows)
        fmt::print("{:>{}}  {:>{}}\n", d, wd, chi.get_str(), wc);
    return 0;
}

int cmd_koszul(const Common& c, int vars, const std::string& seq_text, int max_degree) {
    if (vars < 1 || vars > 8)
        throw hirz::DomainError("--vars must be between 1 and 8");
    if (max_degree < 0 || max_degree > 32)
        throw hirz::DomainError("--max-degree must be between 0 and 32");
    std::vector<hirz::Poly> polys;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = seq_text.find(',', start);
        const std::string piece = seq_text.substr(
            start, comma == std::string::npos ? std::string::npos : comma - start);
        polys.push_back(hirz::Poly::parse(vars, piece));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    const hirz::HomogeneousSequence seq(hirz::GradedRing(vars), std::move(polys));
    const hirz::KoszulReport rep = hirz::koszul_homology(seq, max_degree);
    const bool regular = hirz::is_regular_up_to(seq, max_degree);
    if (c.json) {
        ordered_json elems = ordered_json::array();
        for (const auto& p : seq.elements()) elems.push_back(p.str());
        emit({{"num_vars", vars},
              {"sequence", std::move(elems)},
              {"degrees", seq.degrees()},
              {"max_degree", max_degree},
              {"regular", regular},
              {"dims", rep.dims},
              {"chain_dims", rep.chain_dims}});
        return 0;
    }
    std::size_t w = 1;
    for (const auto& row : rep.dims)
        for (long v : row) w = std::max(w, std::to_string(v).size());
    w = std::max(w, std::to_string(max_degree).size());
    fmt::print("homology dimensions by internal degree\n");
    fmt::print("{:>5}", "k\\t");
    for (int t = 0; t <= max_degree; ++t) fmt::print("  {:>{}}", t, w);
    fmt::print("\n");
    for (std::size_t k = 0; k < rep.dims.size(); ++k) {
        fmt::print("{:>5}", k);
        for (long v : rep.dims[k]) fmt::print("  {:>{}}", v, w);
        fmt::print("\n");
    }
    fmt::print("regular up to degree {}: {}\n", max_degree, regular ? "yes" : "no");
    return 0;
}

int cmd_check(const Common& c) {
    const auto ws = load_workspace(c.workspace_path);
    std::vector<hirz::CheckResult> results = hirz::run_self_checks();
    if (ws) {
        std::vector<hirz::CheckResult> extra = hirz::run_workspace_checks(*ws);
        results.insert(results.end(), extra.begin(), extra.end());
    }
    bool all = true;
    for (const auto& r : results) all = all && r.passed;
    if (c.json) {
        ordered_json jres = ordered_json::array();
        for (const auto& r : results)
            jres.push_back(
                {{"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
        emit({{"results", std::move(jres)}, {"all_passed", all}});
    } else {
        for (const auto& r : results) {
            if (r.passed)
                fmt::print("ok   {}\n", r.name);
            else
                fmt::print("FAIL {}: {}\n", r.name, r.detail);
        }
        fmt::print("{}\n", all ? "all checks passed" : "self-check failed");
    }
    return all ? 0 : 2;
}

int run(int argc, char** argv) {
    CLI::App app{"exact characteristic-class calculus on projective space"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "hirz 1.0.0");

    Common eval_c;
    std::string eval_text;
    CLI::App* eval_cmd = app.add_subcommand(
        "eval", "evaluate an expression (bundles, classes, scalars)");
    eval_cmd->add_option("expr", eval_text, "expression to evaluate")->required();
    add_common(eval_cmd, eval_c);

    Common hrr_c;
    std::string hrr_text;
    CLI::App* hrr_cmd = app.add_subcommand(
        "hrr", "compare chi from K-theory with the integral of ch * td");
    hrr_cmd->add_option("expr", hrr_text, "bundle-valued expression")->required();
    add_common(hrr_cmd, hrr_c);

    Common table_c;
    long dmin = -5, dmax = 5;
    CLI::App* table_cmd =
        app.add_subcommand("chi-table", "tabulate chi of O(d) over a range of d");
    table_cmd->add_option("--dmin", dmin, "smallest twist")->capture_default_str();
    table_cmd->add_option("--dmax", dmax, "largest twist")->capture_default_str();
    add_common(table_cmd, table_c);

    Common koszul_c;
    int vars = 0, max_degree = 6;
    std::string seq_text;
    CLI::App* koszul_cmd = app.add_subcommand(
        "koszul", "homology of the Koszul complex of a homogeneous sequence");
    koszul_cmd->add_option("--vars", vars, "number of polynomial variables")->required();
    koszul_cmd->add_option("--seq", seq_text, "comma-separated homogeneous polynomials")
        ->required();
    koszul_cmd->add_option("--max-degree", max_degree, "largest internal degree")
        ->capture_default_str();
    add_common(koszul_cmd, koszul_c, /*with_ambient=*/false);

    Common check_c;
    CLI::App* check_cmd =
        app.add_subcommand("check", "run the built-in consistency checks");
    add_common(check_cmd, check_c, /*with_ambient=*/false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    if (eval_cmd->parsed()) return cmd_eval(eval_c, eval_text);
    if (hrr_cmd->parsed()) return cmd_hrr(hrr_c, hrr_text);
    if (table_cmd->parsed()) return cmd_chi_table(table_c, dmin, dmax);
    if (koszul_cmd->parsed()) return cmd_koszul(koszul_c, vars, seq_text, max_degree);
    if (check_cmd->parsed()) return cmd_check(check_c);
    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const hirz::InternalError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    } catch (const hirz::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
}
