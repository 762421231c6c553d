// Acceptance gate: one line per criterion, nonzero exit if any fails.
// Every comparison is exact; the only tolerances are the wall-clock budgets
// on the two grid-heavy criteria.

#include <chrono>
#include <cstdio>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include <sys/wait.h>

#include "json.hpp"

#include "hirz/bundle.hpp"
#include "hirz/chow.hpp"
#include "hirz/error.hpp"
#include "hirz/koszul.hpp"
#include "hirz/ktheory.hpp"
#include "hirz/matrix.hpp"
#include "hirz/riemann_roch.hpp"

namespace {

using hirz::BundleClass;
using hirz::ChowClass;
using hirz::GradedRing;
using hirz::HomogeneousSequence;
using hirz::Integer;
using hirz::KClass;
using hirz::KoszulReport;
using hirz::MatQ;
using hirz::Poly;
using hirz::Rational;
using hirz::TrackedBundle;

int g_failures = 0;

void require(bool cond, const std::string& msg) {
    if (!cond) throw std::runtime_error(msg);
}

Integer binom(long n, long k) {
    if (k < 0 || k > n) return 0;
    Integer acc = 1;
    for (long i = 1; i <= k; ++i) {
        acc *= n - k + i;
        acc /= i;
    }
    return acc;
}

void criterion(int idx, const char* label, double budget_secs, void (*body)()) {
    using clock = std::chrono::steady_clock;
    const auto t0 = clock::now();
    bool ok = true;
    std::string detail;
    try {
        body();
    } catch (const std::exception& e) {
        ok = false;
        detail = e.what();
    }
    const double secs = std::chrono::duration<double>(clock::now() - t0).count();
    if (ok && budget_secs > 0 && secs > budget_secs) {
        ok = false;
        detail = "took " + std::to_string(secs) + "s, budget " +
                 std::to_string(budget_secs) + "s";
    }
    if (ok) {
        std::printf("PASS  criterion %d: %s (%.2fs)\n", idx, label, secs);
    } else {
        std::printf("FAIL  criterion %d: %s -- %s\n", idx, label, detail.c_str());
        ++g_failures;
    }
    std::fflush(stdout);
}

// 1. chi(P^n, O(d)) three ways on a grid: K-theory euler characteristic,
//    integral of ch * td, and the independent monomial-counting oracle.
void run_hrr_grid() {
    for (int n = 1; n <= 8; ++n) {
        for (long d = -n - 5; d <= 10; ++d) {
            const hirz::HrrReport r = hirz::hrr_check(hirz::tracked_line(n, d));
            require(r.equal, "chi != integral of ch*td");
            const Integer oracle = hirz::cohomology_oracle(n, d);
            require(r.lhs == oracle, "chi disagrees with the counting oracle");
            if (d >= 0)
                require(r.lhs == binom(n + d, n), "chi(O(d)) != C(n+d, n) for d >= 0");
            if (d < 0 && d >= -n)
                require(r.lhs == 0, "chi(O(d)) != 0 for -n <= d < 0");
        }
    }
}

// 2. The Todd class computed from the series engine matches the one computed
//    from the tangent bundle, with the P^1 and P^2 values pinned.
void run_todd() {
    for (int n = 1; n <= 8; ++n) {
        const ChowClass t = hirz::todd_of_projective_space(n);
        require(t == hirz::todd(hirz::tangent_bundle(n)),
                "series route disagrees with the bundle route");
        require(t.part(0) == Rational(1), "todd degree-0 part");
    }
    const ChowClass t1 = hirz::todd_of_projective_space(1);
    require(t1.part(1) == Rational(1), "td(P^1) coefficient of H");
    const ChowClass t2 = hirz::todd_of_projective_space(2);
    require(t2.part(1) == Rational(3, 2), "td(P^2) coefficient of H");
    require(t2.part(2) == Rational(1), "td(P^2) coefficient of H^2");
    for (int n = 1; n <= 8; ++n)
        require(hirz::todd_of_projective_space(n).integral() == Rational(1),
                "integral of td(T) is 1");
}

// 3. c(T_{P^n}) = (1 + H)^{n+1} truncated.
void run_tangent_chern() {
    for (int n = 1; n <= 8; ++n) {
        const BundleClass t = hirz::tangent_bundle(n);
        require(t.rank() == n, "tangent bundle rank");
        for (int k = 0; k <= n; ++k)
            require(t.chern_coeff(k) == Rational(binom(n + 1, k)),
                    "c_k(T) != C(n+1, k)");
    }
}

// 4. K_0(P^n) = Z[xi]/(1-xi)^{n+1}: the relation reduces to zero, xi is a
//    unit, ch is injective on the basis, and euler_char kills the relation.
void run_ktheory() {
    for (int n = 1; n <= 8; ++n) {
        KClass rel = hirz::k_sub(KClass::unit(n), hirz::k_line(n, 1));
        KClass p = KClass::unit(n);
        for (int i = 0; i <= n; ++i) p = hirz::k_mul(p, rel);
        require(p.is_zero(), "(1 - xi)^{n+1} does not reduce to zero");
        require(hirz::k_mul(hirz::k_line(n, 1), hirz::k_line(n, -1)) == KClass::unit(n),
                "xi * xi^{-1} != 1");
        MatQ m(n + 1, n + 1);
        for (int k = 0; k <= n; ++k) {
            const ChowClass ch = hirz::ch_map(hirz::k_line(n, k));
            for (int j = 0; j <= n; ++j) m.at(k, j) = ch.part(j);
        }
        require(m.rank() == n + 1, "ch images of the basis are dependent");
        for (int mtw = 0; mtw <= n; ++mtw) {
            const KClass cls = hirz::k_mul(p, hirz::k_line(n, mtw));
            require(hirz::euler_char(cls) == 0,
                    "euler characteristic does not kill the relation");
        }
    }
}

// 5. Randomized identity suite on split bundles: Whitney, additivity and
//    multiplicativity of ch, multiplicativity of td, segre * c = 1, double
//    dual, the alternating wedge identity, and the Newton-identity route
//    against the root route.
void run_identities() {
    std::mt19937_64 rng(424243);
    const auto rnd_bundle = [&rng](int n, int r) {
        BundleClass b = hirz::line_bundle(n, static_cast<long>(rng() % 9) - 4);
        for (int i = 1; i < r; ++i)
            b = hirz::direct_sum(b,
                                 hirz::line_bundle(n, static_cast<long>(rng() % 9) - 4));
        return b;
    };
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 6);
        const int re = 1 + static_cast<int>(rng() % 4);
        const int rf = 1 + static_cast<int>(rng() % 4);
        const BundleClass e = rnd_bundle(n, re);
        const BundleClass f = rnd_bundle(n, rf);
        const BundleClass s = hirz::direct_sum(e, f);
        require(s.chern() == e.chern() * f.chern(), "whitney formula");
        require(hirz::chern_character(s) ==
                    hirz::chern_character(e) + hirz::chern_character(f),
                "ch is not additive");
        require(hirz::chern_character(hirz::tensor(e, f)) ==
                    hirz::chern_character(e) * hirz::chern_character(f),
                "ch is not multiplicative");
        require(hirz::todd(s) == hirz::todd(e) * hirz::todd(f),
                "td is not multiplicative");
        require(hirz::segre(e) * e.chern() == ChowClass::unit(n), "segre * c != 1");
        require(hirz::dual(hirz::dual(e)) == e, "double dual");
        require(hirz::chern_character_roots(e) == hirz::chern_character(e),
                "root route for ch");
        require(hirz::todd_roots(e) == hirz::todd(e), "root route for td");
        const int k = static_cast<int>(rng() % (re + 1));
        require(hirz::chern_character_roots(hirz::wedge(k, e)) ==
                    hirz::chern_character(hirz::wedge(k, e)),
                "root route for ch of a wedge");
        ChowClass alt(n);
        for (int j = 0; j <= re; ++j) {
            const ChowClass t = hirz::chern_character(hirz::wedge(j, e));
            alt += (j % 2 == 0) ? t : -t;
        }
        const BundleClass d = hirz::dual(e);
        require(alt == d.chern_part(re) * hirz::inverse(hirz::todd(d)),
                "alternating wedge identity");
    }
}

// 6. Curve and surface Riemann-Roch against the oracle where one exists
//    (genus 0 <-> P^1, the plane context <-> P^2) plus the genus symmetry
//    chi(d) = -chi(2g - 2 - d) and Noether for the plane.
void run_curve_surface() {
    for (long g = 0; g <= 3; ++g) {
        const hirz::CurveContext ctx(g);
        for (long d = -6; d <= 6; ++d) {
            const Integer chi = hirz::curve_chi(ctx, 1, d);
            if (g == 0)
                require(chi == hirz::cohomology_oracle(1, d),
                        "genus 0 disagrees with the P^1 oracle");
            require(chi == -hirz::curve_chi(ctx, 1, 2 * g - 2 - d),
                    "curve chi symmetry about g - 1");
            require(hirz::curve_chi(ctx, 1, d + 1) - chi == 1,
                    "twisting by a point adds 1");
        }
    }
    const hirz::SurfaceContext plane({"H"}, {{Integer(1)}}, {Integer(-3)}, Integer(3));
    require(hirz::noether_chi(plane) == Integer(1), "noether value of the plane");
    for (long d = -8; d <= 8; ++d)
        require(hirz::surface_chi(plane, {Integer(d)}) ==
                    Rational(hirz::cohomology_oracle(2, d)),
                "plane chi disagrees with the P^2 oracle");
}

// 7. Koszul homology: regular families certified through degree 10, the
//    repeated-variable complex, the Euler identity, annihilation on 50
//    random monomial sequences, and Tor of the residue field.
void run_koszul() {
    for (int m = 1; m <= 3; ++m) {
        std::vector<Poly> vars;
        for (int i = 0; i < m; ++i) vars.push_back(Poly::variable(m, i));
        const HomogeneousSequence seq(GradedRing(m), std::move(vars));
        require(hirz::is_regular_up_to(seq, 10), "variables are a regular sequence");
        require(hirz::euler_identity_check(seq, 8), "euler identity for variables");
    }
    {
        const HomogeneousSequence powers(
            GradedRing(3),
            {Poly::parse(3, "x0^2"), Poly::parse(3, "x1^2"), Poly::parse(3, "x2^3")});
        require(hirz::is_regular_up_to(powers, 10), "pure powers are regular");
        std::mt19937_64 rng(63001);
        std::vector<Poly> forms;
        for (int i = 0; i < 3; ++i) {
            Poly p(3);
            for (int j = 0; j < 3; ++j) {
                std::vector<int> exps(3, 0);
                exps[j] = 1;
                p.add_term(exps, Rational(1 + static_cast<long>(rng() % 7)));
            }
            forms.push_back(std::move(p));
        }
        require(hirz::is_regular_up_to(HomogeneousSequence(GradedRing(3), forms), 10),
                "generic linear forms are regular");
    }
    {
        const Poly x0 = Poly::variable(1, 0);
        const KoszulReport rep =
            hirz::koszul_homology(HomogeneousSequence(GradedRing(1), {x0, x0}), 6);
        for (int t = 0; t <= 6; ++t) {
            require(rep.dims[1][t] == (t == 1 ? 1 : 0),
                    "H1 of the repeated variable, wrong degree profile");
            require(rep.dims[2][t] == 0, "H2 of the repeated variable");
        }
    }
    std::mt19937_64 rng(90417);
    for (int trial = 0; trial < 50; ++trial) {
        const int m = 2 + static_cast<int>(rng() % 2);
        const int len = 2 + static_cast<int>(rng() % 2);
        std::vector<Poly> polys;
        for (int i = 0; i < len; ++i) {
            std::vector<int> exps(m, 0);
            const int deg = 1 + static_cast<int>(rng() % 3);
            for (int j = 0; j < deg; ++j) ++exps[rng() % m];
            Poly p(m);
            p.add_term(exps, Rational(1));
            polys.push_back(std::move(p));
        }
        const HomogeneousSequence seq(GradedRing(m), std::move(polys));
        require(hirz::euler_identity_check(seq, 6), "euler identity, random sequence");
        for (int k = 1; k <= len; ++k)
            require(hirz::annihilation_check(seq, k, 6),
                    "the sequence does not annihilate its homology");
    }
    for (int m = 2; m <= 5; ++m) {
        std::vector<Poly> vars;
        for (int i = 0; i < m; ++i) vars.push_back(Poly::variable(m, i));
        const HomogeneousSequence seq(GradedRing(m), std::move(vars));
        const auto tor = hirz::tor_dimensions(seq, m);
        for (int k = 0; k <= m; ++k)
            for (int t = 0; t <= m; ++t)
                require(tor[k][t] == (t == k ? binom(m, k).get_si() : 0),
                        "Tor of the residue field, wrong dimension");
    }
}

// 8. The binary: documented examples byte for byte, stable across runs,
//    positions in parse errors, exit codes.
struct RunResult {
    int code;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    const std::string cmd = std::string(HIRZ_CLI_PATH) + " " + args;
    FILE* p = popen(cmd.c_str(), "r");
    if (p == nullptr) throw std::runtime_error("popen failed");
    std::string out;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, got);
    const int status = pclose(p);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

void run_cli_criterion() {
    // documented example 1
    RunResult r = run_cli("eval -n 2 \"chi(O(3))\" 2>/dev/null");
    require(r.code == 0 && r.out == "10\n", "eval example");
    // documented example 2
    r = run_cli("hrr -n 4 \"O(2)\" --json 2>/dev/null");
    require(r.code == 0, "hrr example exit code");
    require(r.out == "{\n  \"lhs\": 15,\n  \"rhs\": \"15\",\n  \"equal\": true\n}\n",
            "hrr example bytes");
    // documented example 3, text form
    r = run_cli("koszul --vars 2 --seq \"x0,x1\" --max-degree 5 2>/dev/null");
    require(r.code == 0, "koszul example exit code");
    require(r.out ==
                "homology dimensions by internal degree\n"
                "  k\\t  0  1  2  3  4  5\n"
                "    0  1  0  0  0  0  0\n"
                "    1  0  0  0  0  0  0\n"
                "    2  0  0  0  0  0  0\n"
                "regular up to degree 5: yes\n",
            "koszul example bytes (text)");
    r = run_cli("koszul --vars 2 --seq \"x0,x1\" --max-degree 5 --json 2>/dev/null");
    require(r.code == 0, "koszul json exit code");
    nlohmann::ordered_json want;
    want["num_vars"] = 2;
    want["sequence"] = {"x0", "x1"};
    want["degrees"] = {1, 1};
    want["max_degree"] = 5;
    want["regular"] = true;
    want["dims"] = {{1, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 0, 0}};
    want["chain_dims"] = {{1, 2, 3, 4, 5, 6}, {0, 2, 4, 6, 8, 10}, {0, 0, 1, 2, 3, 4}};
    require(r.out == want.dump(2) + "\n", "koszul json bytes");
    // byte stability
    for (const char* cmd :
         {"hrr -n 4 \"O(2)\" --json 2>/dev/null",
          "chi-table -n 2 --dmin -3 --dmax 3 --json 2>/dev/null",
          "koszul --vars 2 --seq \"x0,x1\" --max-degree 5 --json 2>/dev/null"}) {
        const RunResult a = run_cli(cmd);
        const RunResult b = run_cli(cmd);
        require(a.code == 0 && a.code == b.code && a.out == b.out && !a.out.empty(),
                "output is not byte-stable");
    }
    // parse errors carry positions and exit 1
    r = run_cli("eval -n 2 \"chi(O(3)\" 2>&1");
    require(r.code == 1, "parse error exit code");
    require(r.out.find("position 9") != std::string::npos,
            "parse error does not carry its position");
    r = run_cli("koszul --vars 1 --seq \"x3\" --max-degree 3 2>&1");
    require(r.code == 1 && r.out.find("position 1") != std::string::npos,
            "polynomial parse error position");
    // exit codes
    require(run_cli("eval -n 2 \"chi(T)\" 2>/dev/null").code == 1,
            "untracked chi should exit 1");
    require(run_cli("eval \"chi(O(1))\" 2>/dev/null").code == 1,
            "missing ambient should exit 1");
    require(run_cli("bogus 2>/dev/null").code == 1, "unknown subcommand should exit 1");
    require(run_cli("check 2>/dev/null").code == 0, "self-check should pass");
}

}  // namespace

int main() {
    criterion(1, "chi(P^n, O(d)) grid, three routes, n <= 8", 5.0, run_hrr_grid);
    criterion(2, "Todd class of P^n, series vs bundle route", 0.0, run_todd);
    criterion(3, "Chern classes of the tangent bundle", 0.0, run_tangent_chern);
    criterion(4, "K-theory ring structure and the ch map", 0.0, run_ktheory);
    criterion(5, "randomized characteristic-class identities", 0.0, run_identities);
    criterion(6, "curve and surface Riemann-Roch", 0.0, run_curve_surface);
    criterion(7, "Koszul homology suite", 60.0, run_koszul);
    criterion(8, "command-line interface", 0.0, run_cli_criterion);
    if (g_failures > 0) {
        std::printf("%d criterion(s) failed\n", g_failures);
        return 1;
    }
    std::printf("all 8 criteria passed\n");
    return 0;
}
