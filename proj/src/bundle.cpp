#include "hirz/bundle.hpp"

#include <string>

#include "hirz/error.hpp"

namespace hirz {

BundleClass::BundleClass(int ambient, int rank, ChowClass chern) : rank_(rank), chern_(std::move(chern)) {
    if (rank < 0) throw DomainError("bundle rank must be >= 0");
    if (chern_.ambient() != ambient) throw DomainError("chern class ambient does not match bundle ambient");
    if (chern_.part(0) != Rational(1)) throw DomainError("total chern class must have constant part 1");
    for (int k = std::min(rank, ambient) + 1; k <= ambient; ++k)
        if (!chern_.part(k).is_zero())
            throw DomainError("c_" + std::to_string(k) + " must vanish beyond the rank");
}

ChowClass BundleClass::chern_part(int k) const {
    ChowClass c(ambient());
    if (k >= 0 && k <= ambient()) c.set_part(k, chern_.part(k));
    return c;
}

bool operator==(const BundleClass& a, const BundleClass& b) {
    return a.rank_ == b.rank_ && a.chern_ == b.chern_;
}

BundleClass line_bundle(int ambient, const Integer& d) {
    ChowClass c = ChowClass::unit(ambient);
    if (ambient >= 1) c.set_part(1, Rational(d));
    return BundleClass(ambient, 1, c);
}

BundleClass trivial_bundle(int ambient, int rank) {
    return BundleClass(ambient, rank, ChowClass::unit(ambient));
}

BundleClass tangent_bundle(int ambient) {
    if (ambient < 1) throw DomainError("tangent bundle needs ambient dimension >= 1");
    ChowClass c(ambient);
    for (int k = 0; k <= ambient; ++k) c.set_part(k, Rational(binomial(ambient + 1, k)));
    return BundleClass(ambient, ambient, c);
}

BundleClass direct_sum(const BundleClass& e, const BundleClass& f) {
    if (e.ambient() != f.ambient()) throw DomainError("direct sum needs matching ambient dimensions");
    return BundleClass(e.ambient(), e.rank() + f.rank(), e.chern() * f.chern());
}

ChowClass evaluate_universal(const ElemPoly& x, const std::vector<BundleClass>& bundles) {
    const RootSystem& sys = x.system();
    if (static_cast<int>(bundles.size()) != sys.group_count())
        throw DomainError("one bundle per root group required");
    int ambient = -1;
    for (int g = 0; g < sys.group_count(); ++g) {
        const BundleClass& b = bundles[static_cast<std::size_t>(g)];
        if (sys.group(g).size != b.rank())
            throw DomainError("root group '" + sys.group(g).label + "' has size " +
                              std::to_string(sys.group(g).size) + " but the bundle has rank " +
                              std::to_string(b.rank()));
        if (ambient < 0) ambient = b.ambient();
        else if (ambient != b.ambient()) throw DomainError("bundles must share one ambient dimension");
    }
    if (ambient < 0) throw DomainError("at least one bundle required");
    return evaluate_expansion(x, ambient, [&](int g, int k) {
        return bundles[static_cast<std::size_t>(g)].chern_part(k);
    });
}

namespace {

// Total Chern class of the virtual bundle whose roots are the given linear
// forms in the input bundles' roots: expand Π(1 + ρ), reduce, substitute.
BundleClass from_derived_roots(const std::vector<BundleClass>& inputs, const RootSystem& sys,
                               const std::vector<RootPoly>& droots) {
    const int ambient = inputs.front().ambient();
    RootPoly total = RootPoly::constant(sys, ambient, Rational(1));
    for (const RootPoly& rho : droots)
        total = total * (RootPoly::constant(sys, ambient, Rational(1)) + rho);
    ChowClass c = evaluate_universal(reduce_to_elementaries(total), inputs);
    return BundleClass(ambient, static_cast<int>(droots.size()), c);
}

RootSystem single_group(const BundleClass& e) { return RootSystem({{"a", e.rank()}}); }

// Substitute a zero-constant polynomial into a truncated series.
RootPoly apply_series(const Series& s, const RootPoly& x) {
    RootPoly acc = RootPoly::constant(x.system(), x.truncation(), s.coeff(0));
    RootPoly pw = RootPoly::constant(x.system(), x.truncation(), Rational(1));
    for (int k = 1; k <= s.order(); ++k) {
        pw = pw * x;
        if (pw.is_zero()) break;
        acc += s.coeff(k) * pw;
    }
    return acc;
}

}  // namespace

BundleClass dual(const BundleClass& e) {
    RootSystem sys = single_group(e);
    std::vector<RootPoly> droots;
    for (int i = 0; i < e.rank(); ++i)
        droots.push_back(Rational(-1) * RootPoly::root(sys, e.ambient(), 0, i));
    return from_derived_roots({e}, sys, droots);
}

BundleClass determinant(const BundleClass& e) {
    RootSystem sys = single_group(e);
    RootPoly sum(sys, e.ambient());
    for (int i = 0; i < e.rank(); ++i) sum += RootPoly::root(sys, e.ambient(), 0, i);
    return from_derived_roots({e}, sys, {sum});
}

BundleClass wedge(int k, const BundleClass& e) {
    if (k < 0) throw DomainError("wedge power must be >= 0");
    const int r = e.rank();
    RootSystem sys = single_group(e);
    std::vector<RootPoly> droots;
    if (k <= r) {
        std::vector<int> idx(static_cast<std::size_t>(k));
        for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
        while (true) {
            RootPoly rho(sys, e.ambient());
            for (int i : idx) rho += RootPoly::root(sys, e.ambient(), 0, i);
            droots.push_back(rho);
            if (k == 0) break;
            int i = k - 1;
            while (i >= 0 && idx[static_cast<std::size_t>(i)] == r - k + i) --i;
            if (i < 0) break;
            ++idx[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < k; ++j)
                idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
        }
    }
    return from_derived_roots({e}, sys, droots);
}

BundleClass sym(int k, const BundleClass& e) {
    if (k < 0) throw DomainError("symmetric power must be >= 0");
    const int r = e.rank();
    RootSystem sys = single_group(e);
    std::vector<RootPoly> droots;
    if (r == 0) {
        if (k == 0) droots.push_back(RootPoly(sys, e.ambient()));  // Sym^0(0) = O
    } else {
        // Non-decreasing index tuples of length k.
        std::vector<int> idx(static_cast<std::size_t>(k), 0);
        while (true) {
            RootPoly rho(sys, e.ambient());
            for (int i : idx) rho += RootPoly::root(sys, e.ambient(), 0, i);
            droots.push_back(rho);
            int i = k - 1;
            while (i >= 0 && idx[static_cast<std::size_t>(i)] == r - 1) --i;
            if (i < 0) break;
            ++idx[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < k; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(i)];
        }
    }
    return from_derived_roots({e}, sys, droots);
}

BundleClass tensor(const BundleClass& e, const BundleClass& f) {
    if (e.ambient() != f.ambient()) throw DomainError("tensor needs matching ambient dimensions");
    RootSystem sys({{"a", e.rank()}, {"b", f.rank()}});
    std::vector<RootPoly> droots;
    for (int i = 0; i < e.rank(); ++i)
        for (int j = 0; j < f.rank(); ++j)
            droots.push_back(RootPoly::root(sys, e.ambient(), 0, i) + RootPoly::root(sys, e.ambient(), 1, j));
    return from_derived_roots({e, f}, sys, droots);
}

namespace {

// p_1..p_n from Newton's identities: p_k = c1 p_{k-1} - c2 p_{k-2} + ...
// + (-1)^{k-2} c_{k-1} p_1 + (-1)^{k-1} k c_k.
std::vector<ChowClass> power_sums(const BundleClass& e) {
    const int n = e.ambient();
    std::vector<ChowClass> p;
    for (int k = 1; k <= n; ++k) {
        ChowClass pk(n);
        for (int i = 1; i < k; ++i) {
            ChowClass term = e.chern_part(i) * p[static_cast<std::size_t>(k - i - 1)];
            pk += (i % 2 == 1) ? term : -term;
        }
        ChowClass top = Rational(k) * e.chern_part(k);
        pk += (k % 2 == 1) ? top : -top;
        p.push_back(std::move(pk));
    }
    return p;
}

}  // namespace

ChowClass chern_character(const BundleClass& e) {
    const int n = e.ambient();
    std::vector<ChowClass> p = power_sums(e);
    ChowClass acc = Rational(e.rank()) * ChowClass::unit(n);
    for (int k = 1; k <= n; ++k)
        acc += Rational(Integer(1), factorial(k)) * p[static_cast<std::size_t>(k - 1)];
    return acc;
}

ChowClass todd(const BundleClass& e) {
    const int n = e.ambient();
    std::vector<ChowClass> p = power_sums(e);
    Series q = log(todd_series(n));
    ChowClass arg(n);
    for (int k = 1; k <= n; ++k) arg += q.coeff(k) * p[static_cast<std::size_t>(k - 1)];
    return exp_nilpotent(arg);
}

ChowClass chern_character_roots(const BundleClass& e) {
    const int n = e.ambient();
    RootSystem sys = single_group(e);
    Series ex = exp(Series::x(n));
    RootPoly acc(sys, n);
    for (int i = 0; i < e.rank(); ++i) acc += apply_series(ex, RootPoly::root(sys, n, 0, i));
    return evaluate_universal(reduce_to_elementaries(acc), {e});
}

ChowClass todd_roots(const BundleClass& e) {
    const int n = e.ambient();
    RootSystem sys = single_group(e);
    Series td = todd_series(n);
    RootPoly acc = RootPoly::constant(sys, n, Rational(1));
    for (int i = 0; i < e.rank(); ++i) acc = acc * apply_series(td, RootPoly::root(sys, n, 0, i));
    return evaluate_universal(reduce_to_elementaries(acc), {e});
}

ChowClass segre(const BundleClass& e) { return inverse(e.chern()); }

Rational degree(const BundleClass& e) { return e.chern().part(1); }

}  // namespace hirz
