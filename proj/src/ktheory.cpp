#include "hirz/ktheory.hpp"

#include <sstream>

#include "hirz/error.hpp"

namespace hirz {

KClass::KClass(int ambient) : ambient_(ambient) {
    if (ambient < 1) throw DomainError("ambient dimension must be >= 1");
    c_.assign(static_cast<std::size_t>(ambient) + 1, Integer(0));
}

KClass::KClass(int ambient, std::vector<Integer> coeffs) : ambient_(ambient), c_(std::move(coeffs)) {
    if (ambient < 1) throw DomainError("ambient dimension must be >= 1");
    if (c_.size() != static_cast<std::size_t>(ambient) + 1)
        throw DomainError("k-class coefficient count does not match ambient dimension");
}

KClass KClass::unit(int ambient) {
    KClass k(ambient);
    k.c_[0] = 1;
    return k;
}

bool KClass::is_zero() const {
    for (const Integer& v : c_)
        if (v != 0) return false;
    return true;
}

std::string KClass::str() const {
    std::ostringstream os;
    bool first = true;
    for (int k = 0; k <= ambient_; ++k) {
        const Integer& v = c_[static_cast<std::size_t>(k)];
        if (v == 0) continue;
        Integer a = abs(v);
        if (!first) os << (sgn(v) < 0 ? " - " : " + ");
        else if (sgn(v) < 0) os << "-";
        first = false;
        if (k == 0) os << a.get_str();
        else {
            if (a != 1) os << a.get_str() << "*";
            os << "xi";
            if (k > 1) os << "^" << k;
        }
    }
    if (first) os << "0";
    return os.str();
}

KClass k_reduce(int ambient, std::vector<Integer> poly) {
    const int n = ambient;
    if (n < 1) throw DomainError("ambient dimension must be >= 1");
    // (1-xi)^{n+1} = 0 rewrites the top power: eliminate degrees above n by
    // subtracting multiples of xi^{m-n-1} * (1-xi)^{n+1}, whose leading
    // coefficient at xi^m is (-1)^{n+1}.
    for (int m = static_cast<int>(poly.size()) - 1; m > n; --m) {
        Integer top = poly[static_cast<std::size_t>(m)];
        if (top == 0) continue;
        const int shift = m - n - 1;
        const Integer lead_sign = (n % 2 == 0) ? -1 : 1;  // (-1)^{n+1}
        Integer factor = top * lead_sign;                  // top / leading coefficient
        for (int j = 0; j <= n + 1; ++j) {
            Integer coef = binomial(n + 1, j);
            if (j % 2 == 1) coef = -coef;
            poly[static_cast<std::size_t>(shift + j)] -= factor * coef;
        }
        if (poly[static_cast<std::size_t>(m)] != 0) throw InternalError("k-theory reduction failed to clear a term");
    }
    poly.resize(static_cast<std::size_t>(n) + 1, Integer(0));
    return KClass(n, std::move(poly));
}

KClass k_add(const KClass& a, const KClass& b) {
    if (a.ambient() != b.ambient()) throw DomainError("k-class ambient dimensions differ");
    std::vector<Integer> c = a.coeffs();
    for (std::size_t i = 0; i < c.size(); ++i) c[i] += b.coeffs()[i];
    return KClass(a.ambient(), std::move(c));
}

KClass k_sub(const KClass& a, const KClass& b) { return k_add(a, k_neg(b)); }

KClass k_neg(const KClass& a) {
    std::vector<Integer> c = a.coeffs();
    for (Integer& v : c) v = -v;
    return KClass(a.ambient(), std::move(c));
}

KClass k_mul(const KClass& a, const KClass& b) {
    if (a.ambient() != b.ambient()) throw DomainError("k-class ambient dimensions differ");
    const int n = a.ambient();
    std::vector<Integer> prod(2 * static_cast<std::size_t>(n) + 1, Integer(0));
    for (int i = 0; i <= n; ++i) {
        if (a.coeff(i) == 0) continue;
        for (int j = 0; j <= n; ++j) prod[static_cast<std::size_t>(i + j)] += a.coeff(i) * b.coeff(j);
    }
    return k_reduce(n, std::move(prod));
}

KClass k_line(int ambient, const Integer& d) {
    const int n = ambient;
    if (n < 1) throw DomainError("ambient dimension must be >= 1");
    if (d >= 0) {
        if (!d.fits_slong_p()) throw DomainError("line bundle twist too large");
        std::vector<Integer> poly(static_cast<std::size_t>(d.get_si()) + 1, Integer(0));
        poly.back() = 1;
        return k_reduce(n, std::move(poly));
    }
    // xi^{-1} = sum_{k=0}^{n} (1-xi)^k; then raise to |d|.
    KClass inv(n);
    {
        std::vector<Integer> acc(static_cast<std::size_t>(n) + 1, Integer(0));
        for (int k = 0; k <= n; ++k)
            for (int j = 0; j <= k; ++j) {
                Integer coef = binomial(k, j);
                if (j % 2 == 1) coef = -coef;
                acc[static_cast<std::size_t>(j)] += coef;
            }
        inv = KClass(n, std::move(acc));
    }
    Integer e = -d;
    if (!e.fits_slong_p()) throw DomainError("line bundle twist too large");
    KClass r = KClass::unit(n);
    for (long i = 0; i < e.get_si(); ++i) r = k_mul(r, inv);
    return r;
}

Integer euler_char(const KClass& a) {
    const int n = a.ambient();
    Integer acc = 0;
    for (int k = 0; k <= n; ++k) acc += a.coeff(k) * binomial(n + k, n);
    return acc;
}

ChowClass ch_map(const KClass& a) {
    const int n = a.ambient();
    ChowClass acc(n);
    for (int k = 0; k <= n; ++k) {
        if (a.coeff(k) == 0) continue;
        Series e = exp(Rational(Integer(k)) * Series::x(n));
        acc += Rational(a.coeff(k)) * ChowClass::from_series(n, e);
    }
    return acc;
}

}  // namespace hirz
