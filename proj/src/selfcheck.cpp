#include "hirz/selfcheck.hpp"

#include <random>
#include <utility>

#include "hirz/bundle.hpp"
#include "hirz/chow.hpp"
#include "hirz/error.hpp"
#include "hirz/koszul.hpp"
#include "hirz/ktheory.hpp"
#include "hirz/matrix.hpp"
#include "hirz/riemann_roch.hpp"
#include "hirz/series.hpp"
#include "hirz/workspace.hpp"

namespace hirz {

namespace {

void require(bool cond, const std::string& msg) {
    if (!cond) throw InternalError(msg);
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

void check_series() {
    Series s = Series::constant(8, 1) + Series::x(8) + Rational(3, 7) * pow(Series::x(8), 2);
    require(exp(log(s)) == s, "exp(log(s)) != s");
    const Series td = todd_series(8);
    require(td.coeff(4) == Rational(-1, 720), "todd series x^4 coefficient");
    require(td * inverse(td) == Series::constant(8, 1), "todd series inverse");
    require(log(td).coeff(2) == Rational(-1, 24), "log todd x^2 coefficient");
}

void check_chow() {
    ChowClass c = ChowClass::unit(6) + ChowClass::hyperplane(6) +
                  Rational(2) * pow(ChowClass::hyperplane(6), 2);
    require(c * inverse(c) == ChowClass::unit(6), "chow inverse");
    require(pow(ChowClass::hyperplane(6), 6).integral() == Rational(1), "H^6 integral");
}

void check_matrix() {
    std::mt19937_64 rng(2024);
    MatQ m(18, 18);
    for (int i = 0; i < 18; ++i)
        for (int j = 0; j < 18; ++j)
            m.at(i, j) = Rational(static_cast<long>(rng() % 19) - 9,
                                  1 + static_cast<long>(rng() % 7));
    require(m.rank_bareiss() == m.rank_sparse(), "bareiss vs sparse rank");
}

void check_bundles() {
    const BundleClass e = direct_sum(line_bundle(5, 1), line_bundle(5, -2));
    const BundleClass f = direct_sum(line_bundle(5, 3), tangent_bundle(5));
    require(direct_sum(e, f).chern() == e.chern() * f.chern(), "whitney product");
    require(dual(dual(f)) == f, "dual involution");
    require(chern_character_roots(f) == chern_character(f), "ch via roots");
    require(todd_roots(f) == todd(f), "td via roots");
    require(segre(f) * f.chern() == ChowClass::unit(5), "segre inverse");
    require(chern_character(tensor(e, f)) == chern_character(e) * chern_character(f),
            "ch multiplicative");
}

void check_wedge_sum_identity() {
    const BundleClass e =
        direct_sum(direct_sum(line_bundle(4, 1), line_bundle(4, -2)), line_bundle(4, 3));
    ChowClass lhs(4);
    for (int k = 0; k <= e.rank(); ++k) {
        ChowClass t = chern_character(wedge(k, e));
        lhs += (k % 2 == 0) ? t : -t;
    }
    const BundleClass d = dual(e);
    require(lhs == d.chern_part(e.rank()) * inverse(todd(d)), "wedge-sum identity");
}

void check_ktheory() {
    const int n = 5;
    KClass rel = k_sub(KClass::unit(n), k_line(n, 1));
    KClass p = KClass::unit(n);
    for (int i = 0; i <= n; ++i) p = k_mul(p, rel);
    require(p.is_zero(), "(1-xi)^(n+1) reduces to zero");
    require(k_mul(k_line(n, 1), k_line(n, -1)) == KClass::unit(n), "xi * xi^-1");
    for (long d = 0; d <= 3; ++d)
        require(euler_char(k_line(n, d)) == binom(n + d, n), "chi of O(d) on P^5");
    require(ch_map(k_line(n, 2)) == chern_character(line_bundle(n, 2)), "ch map");
}

void check_hrr_grid() {
    for (int n = 1; n <= 5; ++n) {
        require(todd_of_projective_space(n) == todd(tangent_bundle(n)),
                "todd of projective space");
        for (long d = -n - 2; d <= 6; ++d) {
            const HrrReport r = hrr_check(tracked_line(n, d));
            require(r.equal, "hrr equality for a line bundle");
            require(r.lhs == cohomology_oracle(n, d), "chi against the counting oracle");
        }
    }
}

void check_random_expressions() {
    std::mt19937_64 rng(777);
    for (int n : {2, 3}) {
        for (int trial = 0; trial < 10; ++trial) {
            TrackedBundle b = tracked_line(n, static_cast<long>(rng() % 7) - 3);
            for (int step = 0; step < 3; ++step) {
                const TrackedBundle line = tracked_line(n, static_cast<long>(rng() % 7) - 3);
                switch (rng() % 3) {
                    case 0:
                        b = tracked_sum(b, line);
                        break;
                    case 1:
                        b = tracked_tensor(b, line);
                        break;
                    default:
                        b = tracked_dual(b);
                        break;
                }
            }
            require(hrr_check(b).equal, "hrr on a random bundle expression");
            require(ch_map(*b.kclass) == chern_character(b.bundle),
                    "k-class consistent with chern character");
        }
    }
}

void check_curve_surface() {
    const CurveContext line(0);
    for (long d = -3; d <= 3; ++d)
        require(curve_chi(line, 1, d) == Integer(d + 1), "chi on a genus 0 curve");
    const CurveContext g2(2);
    require(curve_chi(g2, 2, 5) == Integer(3), "chi on a genus 2 curve");

    const SurfaceContext plane({"H"}, {{Integer(1)}}, {Integer(-3)}, Integer(3));
    require(noether_chi(plane) == Integer(1), "noether value for the plane");
    for (long d = -3; d <= 3; ++d)
        require(surface_chi(plane, {Integer(d)}) == Rational(cohomology_oracle(2, d)),
                "surface chi against the counting oracle");
}

void check_koszul() {
    const GradedRing r2(2);
    const HomogeneousSequence vars(
        r2, {Poly::variable(2, 0), Poly::variable(2, 1)});
    require(is_regular_up_to(vars, 6), "variables form a regular sequence");
    require(euler_identity_check(vars, 5), "koszul euler identity");

    const Poly x0 = Poly::variable(1, 0);
    const HomogeneousSequence rep(GradedRing(1), {x0, x0});
    const KoszulReport h = koszul_homology(rep, 4);
    require(h.dims[1][1] == 1, "H1 of the repeated-variable complex");
    require(annihilation_check(rep, 1, 4), "sequence annihilates its first homology");

    const HomogeneousSequence mixed(
        r2, {Poly::parse(2, "x0*x1"), Poly::parse(2, "x0^2")});
    require(!is_regular_up_to(mixed, 6), "dependent pair is not regular");
    require(annihilation_check(mixed, 1, 6), "annihilation for the dependent pair");

    std::mt19937_64 rng(4242);
    for (int trial = 0; trial < 4; ++trial) {
        std::vector<Poly> polys;
        for (int i = 0; i < 2; ++i) {
            std::vector<int> exps = {static_cast<int>(rng() % 3),
                                     static_cast<int>(rng() % 3)};
            if (exps[0] + exps[1] == 0) exps[0] = 1;
            Poly p(2);
            p.add_term(exps, Rational(1));
            polys.push_back(std::move(p));
        }
        const HomogeneousSequence seq(r2, std::move(polys));
        require(annihilation_check(seq, 1, 5), "annihilation for a random monomial pair");
        require(euler_identity_check(seq, 5), "euler identity for a random monomial pair");
    }
}

}  // namespace

std::vector<CheckResult> run_self_checks() {
    static const std::pair<const char*, void (*)()> checks[] = {
        {"series", check_series},
        {"chow", check_chow},
        {"matrix", check_matrix},
        {"bundles", check_bundles},
        {"wedge-sum-identity", check_wedge_sum_identity},
        {"k-theory", check_ktheory},
        {"hrr-grid", check_hrr_grid},
        {"random-bundle-expressions", check_random_expressions},
        {"curve-surface", check_curve_surface},
        {"koszul", check_koszul},
    };
    std::vector<CheckResult> out;
    for (const auto& [name, fn] : checks) {
        try {
            fn();
            out.push_back({name, true, ""});
        } catch (const std::exception& e) {
            out.push_back({name, false, e.what()});
            break;
        }
    }
    return out;
}

std::vector<CheckResult> run_workspace_checks(const Workspace& ws) {
    std::vector<CheckResult> out;
    for (const auto& [name, ctx] : ws.surfaces()) {
        try {
            const std::vector<Integer> zero(ctx.basis_names().size(), Integer(0));
            require(surface_chi(ctx, zero) == Rational(noether_chi(ctx)),
                    "chi(O) disagrees with the Noether value");
            out.push_back({"surface:" + name, true, ""});
        } catch (const std::exception& e) {
            out.push_back({"surface:" + name, false, e.what()});
            break;
        }
    }
    for (const auto& [name, ctx] : ws.curves()) {
        try {
            require(curve_chi(ctx, 1, 0) == Integer(1 - ctx.genus()),
                    "chi(O) disagrees with 1 - g");
            require(curve_chi(ctx, 0, 0) == Integer(0), "chi of the zero bundle");
            out.push_back({"curve:" + name, true, ""});
        } catch (const std::exception& e) {
            out.push_back({"curve:" + name, false, e.what()});
            break;
        }
    }
    return out;
}

}  // namespace hirz
