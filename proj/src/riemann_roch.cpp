#include "hirz/riemann_roch.hpp"

#include <cstddef>
#include <utility>

#include "hirz/error.hpp"
#include "hirz/series.hpp"

namespace hirz {

namespace {

// The dual involution on K_0: [O(k)] -> [O(-k)], extended linearly over the
// reduced basis.  Descends to the quotient because xi is a unit and the
// involution maps (1-xi)^{n+1} to a unit multiple of itself.
KClass k_dual(const KClass& a) {
    const int n = a.ambient();
    KClass out(n);
    for (int k = 0; k <= n; ++k) {
        const Integer& c = a.coeff(k);
        if (c == 0) continue;
        std::vector<Integer> scaled = k_line(n, -k).coeffs();
        for (Integer& v : scaled) v *= c;
        out = k_add(out, KClass(n, std::move(scaled)));
    }
    return out;
}

// Monomials of total degree deg in `vars` variables, built by the prefix-sum
// recursion over the exponent of the last variable.  No binomials: this is
// the counting side of the ledger, euler_char sits on the other side.
Integer count_monomials(int vars, long deg) {
    if (deg < 0) return 0;
    std::vector<Integer> row(static_cast<std::size_t>(deg) + 1, 1);  // one variable
    for (int v = 2; v <= vars; ++v)
        for (std::size_t e = 1; e < row.size(); ++e) row[e] += row[e - 1];
    return row[static_cast<std::size_t>(deg)];
}

}  // namespace

TrackedBundle::TrackedBundle(BundleClass b, KClass k) : bundle(std::move(b)), kclass(std::move(k)) {
    if (bundle.ambient() != kclass->ambient())
        throw DomainError("tracked bundle: K-class lives on a different ambient space");
}

TrackedBundle tracked_line(int ambient, const Integer& d) {
    return {line_bundle(ambient, d), k_line(ambient, d)};
}

TrackedBundle tracked_sum(const TrackedBundle& e, const TrackedBundle& f) {
    TrackedBundle out(direct_sum(e.bundle, f.bundle));
    if (e.kclass && f.kclass) out.kclass = k_add(*e.kclass, *f.kclass);
    return out;
}

TrackedBundle tracked_tensor(const TrackedBundle& e, const TrackedBundle& f) {
    TrackedBundle out(tensor(e.bundle, f.bundle));
    if (e.kclass && f.kclass) out.kclass = k_mul(*e.kclass, *f.kclass);
    return out;
}

TrackedBundle tracked_dual(const TrackedBundle& e) {
    TrackedBundle out(dual(e.bundle));
    if (e.kclass) out.kclass = k_dual(*e.kclass);
    return out;
}

ChowClass todd_of_projective_space(int n) {
    if (n < 1) throw DomainError("ambient dimension must be at least 1");
    return ChowClass::from_series(n, pow(todd_series(n), n + 1));
}

HrrReport hrr_check(const TrackedBundle& e) {
    if (!e.kclass)
        throw UnsupportedError(
            "bundle carries no K-theory class; chi is only computed for bundles "
            "assembled from line bundles by sum, tensor and dual");
    HrrReport r{euler_char(*e.kclass),
                (chern_character(e.bundle) * todd_of_projective_space(e.bundle.ambient())).integral(),
                false};
    r.equal = Rational(r.lhs) == r.rhs;
    return r;
}

Integer cohomology_oracle(int n, long d) {
    if (n < 1) throw DomainError("ambient dimension must be at least 1");
    if (d >= 0) return count_monomials(n + 1, d);        // H^0
    if (d >= -n) return 0;                               // no cohomology at all
    Integer top = count_monomials(n + 1, -d - n - 1);    // H^n, dual to H^0(O(-d-n-1))
    if (n % 2 != 0) top = -top;
    return top;
}

Rational hrr_rhs_residue(int n, const Integer& d) {
    if (n < 1) throw DomainError("ambient dimension must be at least 1");
    const Series one_minus_y = Series::constant(n, 1) - Series::x(n);
    const Series t = -log(one_minus_y);  // t = x expressed in y
    return (exp(Rational(d) * t) * inverse(one_minus_y)).coeff(n);
}

CurveContext::CurveContext(long genus) : genus_(genus) {
    if (genus < 0) throw DomainError("curve genus must be nonnegative");
}

Integer curve_chi(const CurveContext& ctx, long rank, const Integer& deg) {
    if (rank < 0) throw DomainError("bundle rank must be nonnegative");
    return deg + Integer(rank) * (Integer(1) - Integer(ctx.genus()));
}

SurfaceContext::SurfaceContext(std::vector<std::string> basis_names,
                               std::vector<std::vector<Integer>> pairing,
                               std::vector<Integer> canonical, Integer c2_integral)
    : names_(std::move(basis_names)),
      pairing_(std::move(pairing)),
      canonical_(std::move(canonical)),
      c2_(std::move(c2_integral)) {
    const std::size_t n = names_.size();
    if (n == 0) throw DomainError("surface context needs a nonempty divisor basis");
    for (std::size_t i = 0; i < n; ++i) {
        if (names_[i].empty()) throw DomainError("divisor basis labels must be nonempty");
        for (std::size_t j = i + 1; j < n; ++j)
            if (names_[i] == names_[j])
                throw DomainError("duplicate divisor basis label '" + names_[i] + "'");
    }
    if (pairing_.size() != n || canonical_.size() != n)
        throw DomainError("pairing matrix and canonical class must match the basis size");
    for (const auto& row : pairing_)
        if (row.size() != n) throw DomainError("intersection pairing must be square");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (pairing_[i][j] != pairing_[j][i])
                throw InconsistentContextError("intersection pairing is not symmetric");
    Integer nsum = intersect(canonical_, canonical_) + c2_;
    if (nsum % 12 != 0)
        throw InconsistentContextError("K^2 + c2 = " + nsum.get_str() +
                                       " is not divisible by 12, so chi(O_S) is not an integer");
}

Integer SurfaceContext::intersect(const std::vector<Integer>& a,
                                  const std::vector<Integer>& b) const {
    if (a.size() != names_.size() || b.size() != names_.size())
        throw DomainError("divisor vector length does not match the basis");
    Integer acc = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) acc += a[i] * pairing_[i][j] * b[j];
    }
    return acc;
}

Integer noether_chi(const SurfaceContext& ctx) {
    return (ctx.intersect(ctx.canonical(), ctx.canonical()) + ctx.c2_integral()) / 12;
}

Rational surface_chi(const SurfaceContext& ctx, const std::vector<Integer>& d) {
    const Integer dd = ctx.intersect(d, d);
    const Integer dk = ctx.intersect(d, ctx.canonical());
    Rational chi = Rational(dd - dk, 2) + Rational(noether_chi(ctx));
    if (!chi.is_integer())
        throw InconsistentContextError("chi(O(D)) = " + chi.str() +
                                       " is not an integer; the intersection data violates "
                                       "adjunction and cannot come from a smooth surface");
    return chi;
}

}  // namespace hirz
