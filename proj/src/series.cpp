#include "hirz/series.hpp"

#include <sstream>

namespace hirz {

Series::Series(int order) : order_(order) {
    if (order < 0) throw DomainError("series order must be >= 0");
    c_.assign(static_cast<std::size_t>(order) + 1, Rational(0));
}

Series::Series(int order, std::vector<Rational> coeffs) : order_(order), c_(std::move(coeffs)) {
    if (order < 0) throw DomainError("series order must be >= 0");
    if (c_.size() != static_cast<std::size_t>(order) + 1)
        throw DomainError("series coefficient count does not match order");
}

Series Series::constant(int order, const Rational& c) {
    Series s(order);
    s.c_[0] = c;
    return s;
}

Series Series::x(int order) {
    Series s(order);
    if (order >= 1) s.c_[1] = Rational(1);
    return s;
}

const Rational& Series::coeff(int k) const {
    static const Rational zero(0);
    if (k < 0 || k > order_) return zero;
    return c_[static_cast<std::size_t>(k)];
}

void Series::set_coeff(int k, const Rational& c) {
    if (k < 0 || k > order_) throw DomainError("series coefficient index out of range");
    c_[static_cast<std::size_t>(k)] = c;
}

Series Series::truncated(int new_order) const {
    Series r(new_order);
    for (int k = 0; k <= new_order && k <= order_; ++k) r.c_[static_cast<std::size_t>(k)] = c_[static_cast<std::size_t>(k)];
    return r;
}

bool Series::is_zero() const {
    for (const auto& c : c_)
        if (!c.is_zero()) return false;
    return true;
}

void Series::check_same_order(const Series& o) const {
    if (order_ != o.order_)
        throw DomainError("series truncation orders differ (" + std::to_string(order_) + " vs " +
                          std::to_string(o.order_) + ")");
}

Series& Series::operator+=(const Series& o) {
    check_same_order(o);
    for (int k = 0; k <= order_; ++k) c_[static_cast<std::size_t>(k)] += o.c_[static_cast<std::size_t>(k)];
    return *this;
}

Series& Series::operator-=(const Series& o) {
    check_same_order(o);
    for (int k = 0; k <= order_; ++k) c_[static_cast<std::size_t>(k)] -= o.c_[static_cast<std::size_t>(k)];
    return *this;
}

Series operator-(const Series& a) {
    Series r(a.order_);
    for (int k = 0; k <= a.order_; ++k) r.c_[static_cast<std::size_t>(k)] = -a.c_[static_cast<std::size_t>(k)];
    return r;
}

Series operator*(const Series& a, const Series& b) {
    a.check_same_order(b);
    Series r(a.order_);
    for (int i = 0; i <= a.order_; ++i) {
        if (a.c_[static_cast<std::size_t>(i)].is_zero()) continue;
        for (int j = 0; i + j <= a.order_; ++j)
            r.c_[static_cast<std::size_t>(i + j)] += a.c_[static_cast<std::size_t>(i)] * b.c_[static_cast<std::size_t>(j)];
    }
    return r;
}

Series operator*(const Rational& c, Series s) {
    for (auto& v : s.c_) v *= c;
    return s;
}

bool operator==(const Series& a, const Series& b) {
    return a.order_ == b.order_ && a.c_ == b.c_;
}

Series pow(const Series& s, long e) {
    if (e < 0) throw DomainError("negative series exponent");
    Series r = Series::constant(s.order(), Rational(1));
    Series b = s;
    while (e > 0) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

Series exp(const Series& s) {
    if (!s.coeff(0).is_zero())
        throw DomainError("series exp requires zero constant term, got " + s.coeff(0).str());
    const int n = s.order();
    Series r = Series::constant(n, Rational(1));
    Series term = Series::constant(n, Rational(1));
    for (int k = 1; k <= n; ++k) {
        term = term * s;
        r += Rational(Integer(1), factorial(k)) * term;
    }
    return r;
}

Series inverse(const Series& s) {
    if (s.coeff(0) != Rational(1))
        throw DomainError("series inverse requires constant term 1, got " + s.coeff(0).str());
    const int n = s.order();
    Series r(n);
    r.set_coeff(0, Rational(1));
    // r_k = -sum_{i=1..k} s_i r_{k-i}
    for (int k = 1; k <= n; ++k) {
        Rational acc(0);
        for (int i = 1; i <= k; ++i) acc += s.coeff(i) * r.coeff(k - i);
        r.set_coeff(k, -acc);
    }
    return r;
}

Series log(const Series& s) {
    if (s.coeff(0) != Rational(1))
        throw DomainError("series log requires constant term 1, got " + s.coeff(0).str());
    const int n = s.order();
    // log(1+t) = sum_{k>=1} (-1)^{k-1} t^k / k with t = s - 1.
    Series t = s;
    t.set_coeff(0, Rational(0));
    Series r(n);
    Series term = Series::constant(n, Rational(1));
    for (int k = 1; k <= n; ++k) {
        term = term * t;
        Rational c(Integer((k % 2 == 1) ? 1 : -1), Integer(k));
        r += c * term;
    }
    return r;
}

Series todd_series(int order) {
    if (order < 0) throw DomainError("series order must be >= 0");
    // 1 - e^{-x} has no constant term, so dividing by x just shifts it down;
    // one extra order is needed before the shift.
    Series em = exp(-Series::x(order + 1));
    Series g(order);
    for (int k = 0; k <= order; ++k) g.set_coeff(k, -em.coeff(k + 1));
    return inverse(g);
}

std::string Series::str() const {
    std::ostringstream os;
    bool first = true;
    for (int k = 0; k <= order_; ++k) {
        const Rational& c = c_[static_cast<std::size_t>(k)];
        if (c.is_zero()) continue;
        if (!first) os << (c.sign() < 0 ? " - " : " + ");
        else if (c.sign() < 0) os << "-";
        first = false;
        Rational a = c.sign() < 0 ? -c : c;
        if (k == 0) os << a.str();
        else {
            if (a != Rational(1)) os << a.str() << "*";
            os << "x";
            if (k > 1) os << "^" << k;
        }
    }
    if (first) os << "0";
    return os.str();
}

}  // namespace hirz
