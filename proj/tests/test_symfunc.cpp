#include <doctest.h>

#include <random>

#include "hirz/bundle.hpp"
#include "hirz/symfunc.hpp"

using hirz::BundleClass;
using hirz::ChowClass;
using hirz::ElemPoly;
using hirz::Exps;
using hirz::Integer;
using hirz::Rational;
using hirz::RootPoly;
using hirz::RootSystem;

TEST_CASE("elementary symmetric polynomials") {
    RootSystem sys({{"a", 3}});
    CHECK(hirz::elementary_symmetric(sys, 4, 0, 0) == RootPoly::constant(sys, 4, Rational(1)));

    RootSystem two({{"a", 2}});
    RootPoly e1 = hirz::elementary_symmetric(two, 4, 0, 1);
    CHECK(e1 == RootPoly::root(two, 4, 0, 0) + RootPoly::root(two, 4, 0, 1));

    // e_2 of three roots: all three pairs.
    RootPoly e2 = hirz::elementary_symmetric(sys, 4, 0, 2);
    RootPoly expect = RootPoly::root(sys, 4, 0, 0) * RootPoly::root(sys, 4, 0, 1) +
                      RootPoly::root(sys, 4, 0, 0) * RootPoly::root(sys, 4, 0, 2) +
                      RootPoly::root(sys, 4, 0, 1) * RootPoly::root(sys, 4, 0, 2);
    CHECK(e2 == expect);

    CHECK_THROWS_AS(hirz::elementary_symmetric(sys, 4, 0, 4), hirz::DomainError);
    CHECK_THROWS_AS(hirz::elementary_symmetric(sys, 4, 0, -1), hirz::DomainError);
}

TEST_CASE("reduction of power sum alpha1^2 + alpha2^2") {
    RootSystem sys({{"a", 2}});
    RootPoly a1 = RootPoly::root(sys, 6, 0, 0), a2 = RootPoly::root(sys, 6, 0, 1);
    ElemPoly red = hirz::reduce_to_elementaries(a1 * a1 + a2 * a2);

    // e1^2 - 2 e2, verified by expanding that expression back into roots.
    ElemPoly expect = ElemPoly::e(sys, 6, 0, 1) * ElemPoly::e(sys, 6, 0, 1) -
                      Rational(2) * ElemPoly::e(sys, 6, 0, 2);
    CHECK(red == expect);
    CHECK(expect.expand_roots() == a1 * a1 + a2 * a2);
}

TEST_CASE("reduction of alpha1*alpha2 and of a two-group sum") {
    RootSystem sys({{"a", 2}});
    RootPoly prod = RootPoly::root(sys, 4, 0, 0) * RootPoly::root(sys, 4, 0, 1);
    CHECK(hirz::reduce_to_elementaries(prod) == ElemPoly::e(sys, 4, 0, 2));

    RootSystem ab({{"a", 1}, {"b", 1}});
    RootPoly s = RootPoly::root(ab, 4, 0, 0) + RootPoly::root(ab, 4, 1, 0);
    CHECK(hirz::reduce_to_elementaries(s) == ElemPoly::e(ab, 4, 0, 1) + ElemPoly::e(ab, 4, 1, 1));
}

TEST_CASE("non-symmetric input names a violating transposition") {
    RootSystem sys({{"a", 2}});
    RootPoly lone = RootPoly::root(sys, 4, 0, 0);  // alpha1 alone is not symmetric
    CHECK_THROWS_WITH_AS(hirz::reduce_to_elementaries(lone),
                         doctest::Contains("swapping roots 1 and 2"), hirz::DomainError);
}

TEST_CASE("reduce after expand is the identity on random e-polynomials") {
    std::mt19937_64 rng(314);
    std::uniform_int_distribution<int> coeff(-4, 4);
    for (int trial = 0; trial < 25; ++trial) {
        const int r = 1 + static_cast<int>(rng() % 4);
        const int trunc = 2 + static_cast<int>(rng() % 5);  // up to 6
        RootSystem sys({{"a", r}});
        ElemPoly p = ElemPoly::constant(sys, trunc, Rational(coeff(rng)));
        for (int term = 0; term < 5; ++term) {
            ElemPoly mono = ElemPoly::constant(sys, trunc, Rational(coeff(rng)));
            int degree_budget = trunc;
            for (int k = 1; k <= r && degree_budget >= k; ++k) {
                int m = static_cast<int>(rng() % 3);
                for (int rep = 0; rep < m && degree_budget >= k; ++rep) {
                    mono = mono * ElemPoly::e(sys, trunc, 0, k);
                    degree_budget -= k;
                }
            }
            p += mono;
        }
        ElemPoly again = hirz::reduce_to_elementaries(p.expand_roots());
        CHECK(again.expand_roots() == p.expand_roots());
    }
}

TEST_CASE("newton identity cross-check for power sums up to k = 6") {
    const int r = 4, trunc = 6;
    RootSystem sys({{"a", r}});
    auto power_sum = [&](int k) {
        RootPoly acc(sys, trunc);
        for (int i = 0; i < r; ++i) {
            RootPoly p = RootPoly::constant(sys, trunc, Rational(1));
            for (int rep = 0; rep < k; ++rep) p = p * RootPoly::root(sys, trunc, 0, i);
            acc += p;
        }
        return acc;
    };
    std::vector<ElemPoly> p;  // p[k-1] = reduction of the k-th power sum
    for (int k = 1; k <= 6; ++k) p.push_back(hirz::reduce_to_elementaries(power_sum(k)));

    auto e = [&](int k) {
        if (k > r) return ElemPoly(sys, trunc);  // e_k = 0 beyond the group size
        return ElemPoly::e(sys, trunc, 0, k);
    };
    for (int k = 1; k <= 6; ++k) {
        ElemPoly rhs(sys, trunc);
        for (int i = 1; i < k; ++i) {
            ElemPoly t = e(i) * p[static_cast<std::size_t>(k - i - 1)];
            rhs += (i % 2 == 1) ? t : Rational(-1) * t;
        }
        ElemPoly top = Rational(k) * e(k);
        rhs += (k % 2 == 1) ? top : Rational(-1) * top;
        CHECK(p[static_cast<std::size_t>(k - 1)] == rhs);
    }
}

TEST_CASE("evaluating expansions at concrete bundles") {
    // e1 at O(d) on P^3 -> dH.
    RootSystem line({{"a", 1}});
    ElemPoly e1 = ElemPoly::e(line, 3, 0, 1);
    ChowClass v = hirz::evaluate_universal(e1, {hirz::line_bundle(3, 5)});
    CHECK(v == Rational(5) * ChowClass::hyperplane(3));

    // e1^2 - 2 e2 at the tangent bundle of P^2: 9H^2 - 6H^2 = 3H^2.
    RootSystem two({{"a", 2}});
    ElemPoly expr = ElemPoly::e(two, 2, 0, 1) * ElemPoly::e(two, 2, 0, 1) -
                    Rational(2) * ElemPoly::e(two, 2, 0, 2);
    ChowClass w = hirz::evaluate_universal(expr, {hirz::tangent_bundle(2)});
    ChowClass expect(2);
    expect.set_part(2, Rational(3));
    CHECK(w == expect);

    // Constant expansion 1 evaluates to the unit class.
    CHECK(hirz::evaluate_universal(ElemPoly::constant(two, 2, Rational(1)), {hirz::trivial_bundle(2, 2)}) ==
          ChowClass::unit(2));

    // Rank/group-size mismatch.
    CHECK_THROWS_AS(hirz::evaluate_universal(e1, {hirz::trivial_bundle(3, 2)}), hirz::DomainError);
}

TEST_CASE("evaluation is a ring homomorphism in the expansion argument") {
    std::mt19937_64 rng(2718);
    std::uniform_int_distribution<int> coeff(-3, 3);
    const int r = 3, n = 4;
    RootSystem sys({{"a", r}});
    BundleClass t = hirz::tangent_bundle(4);
    BundleClass b = hirz::direct_sum(hirz::line_bundle(4, 2), hirz::direct_sum(hirz::line_bundle(4, -1), hirz::line_bundle(4, 1)));
    for (const BundleClass& e : {t, b}) {
        if (e.rank() != r) continue;
        for (int trial = 0; trial < 10; ++trial) {
            auto rnd_poly = [&] {
                ElemPoly p = ElemPoly::constant(sys, n, Rational(coeff(rng)));
                for (int term = 0; term < 4; ++term) {
                    ElemPoly mono = ElemPoly::constant(sys, n, Rational(coeff(rng)));
                    for (int k = 1; k <= r; ++k)
                        if (rng() % 2 == 0) mono = mono * ElemPoly::e(sys, n, 0, k);
                    p += mono;
                }
                return p;
            };
            ElemPoly x = rnd_poly(), y = rnd_poly();
            CHECK(hirz::evaluate_universal(x * y, {e}) ==
                  hirz::evaluate_universal(x, {e}) * hirz::evaluate_universal(y, {e}));
            CHECK(hirz::evaluate_universal(x + y, {e}) ==
                  hirz::evaluate_universal(x, {e}) + hirz::evaluate_universal(y, {e}));
        }
    }
}
