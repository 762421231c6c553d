#include <doctest.h>

#include <random>

#include "hirz/matrix.hpp"

using hirz::Integer;
using hirz::MatQ;
using hirz::Rational;

TEST_CASE("rank of small fixed matrices") {
    MatQ a(2, 2);
    a.at(0, 0) = Rational(1);
    a.at(0, 1) = Rational(2);
    a.at(1, 0) = Rational(2);
    a.at(1, 1) = Rational(4);
    CHECK(a.rank() == 1);

    MatQ id(3, 3);
    for (int i = 0; i < 3; ++i) id.at(i, i) = Rational(1);
    CHECK(id.rank() == 3);

    CHECK(MatQ(4, 3).rank() == 0);
    CHECK(MatQ(0, 5).rank() == 0);
}

TEST_CASE("bareiss and sparse ranks agree on random matrices") {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<int> dim(1, 12), val(-4, 4), den(1, 3);
    for (int trial = 0; trial < 80; ++trial) {
        int r = dim(rng), c = dim(rng);
        MatQ m(r, c);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < c; ++j)
                if (rng() % 3 == 0) m.at(i, j) = Rational(Integer(val(rng)), Integer(den(rng)));
        CHECK(m.rank_bareiss() == m.rank_sparse());
    }
}

TEST_CASE("solvability") {
    // x + y = 1, 2x + 2y = 3 is inconsistent; = 2 is consistent.
    MatQ a(2, 2);
    a.at(0, 0) = Rational(1);
    a.at(0, 1) = Rational(1);
    a.at(1, 0) = Rational(2);
    a.at(1, 1) = Rational(2);
    CHECK_FALSE(a.solvable({Rational(1), Rational(3)}));
    CHECK(a.solvable({Rational(1), Rational(2)}));
    CHECK_THROWS_AS(a.solvable({Rational(1)}), hirz::DomainError);
}

TEST_CASE("kernel basis") {
    MatQ a(1, 3);
    a.at(0, 0) = Rational(1);
    a.at(0, 1) = Rational(1);
    a.at(0, 2) = Rational(1);
    auto basis = a.kernel_basis();
    CHECK(basis.size() == 2);
    for (const auto& v : basis) {
        Rational s(0);
        for (const auto& x : v) s += x;
        CHECK(s == Rational(0));
    }

    MatQ id(2, 2);
    id.at(0, 0) = Rational(1);
    id.at(1, 1) = Rational(1);
    CHECK(id.kernel_basis().empty());
}

TEST_CASE("rank plus kernel dimension equals column count") {
    std::mt19937_64 rng(123);
    std::uniform_int_distribution<int> dim(1, 9), val(-3, 3);
    for (int trial = 0; trial < 50; ++trial) {
        int r = dim(rng), c = dim(rng);
        MatQ m(r, c);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < c; ++j)
                if (rng() % 2 == 0) m.at(i, j) = Rational(val(rng));
        CHECK(m.rank() + static_cast<int>(m.kernel_basis().size()) == c);
    }
}
