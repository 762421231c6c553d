#include "hirz/chow.hpp"

#include <sstream>

namespace hirz {

ChowClass::ChowClass(int ambient) : ambient_(ambient) {
    if (ambient < 1) throw DomainError("ambient dimension must be >= 1");
    parts_.assign(static_cast<std::size_t>(ambient) + 1, Rational(0));
}

ChowClass::ChowClass(int ambient, std::vector<Rational> parts) : ambient_(ambient), parts_(std::move(parts)) {
    if (ambient < 1) throw DomainError("ambient dimension must be >= 1");
    if (parts_.size() != static_cast<std::size_t>(ambient) + 1)
        throw DomainError("chow class part count does not match ambient dimension");
}

ChowClass ChowClass::unit(int ambient) {
    ChowClass c(ambient);
    c.parts_[0] = Rational(1);
    return c;
}

ChowClass ChowClass::hyperplane(int ambient) {
    ChowClass c(ambient);
    c.parts_[1] = Rational(1);
    return c;
}

ChowClass ChowClass::from_series(int ambient, const Series& s) {
    ChowClass c(ambient);
    for (int k = 0; k <= ambient && k <= s.order(); ++k) c.parts_[static_cast<std::size_t>(k)] = s.coeff(k);
    return c;
}

const Rational& ChowClass::part(int k) const {
    static const Rational zero(0);
    if (k < 0 || k > ambient_) return zero;
    return parts_[static_cast<std::size_t>(k)];
}

void ChowClass::set_part(int k, const Rational& c) {
    if (k < 0 || k > ambient_) throw DomainError("chow part index out of range");
    parts_[static_cast<std::size_t>(k)] = c;
}

bool ChowClass::is_zero() const {
    for (const auto& c : parts_)
        if (!c.is_zero()) return false;
    return true;
}

void ChowClass::check_same_ambient(const ChowClass& o) const {
    if (ambient_ != o.ambient_)
        throw DomainError("ambient dimensions differ (" + std::to_string(ambient_) + " vs " +
                          std::to_string(o.ambient_) + ")");
}

ChowClass& ChowClass::operator+=(const ChowClass& o) {
    check_same_ambient(o);
    for (std::size_t k = 0; k < parts_.size(); ++k) parts_[k] += o.parts_[k];
    return *this;
}

ChowClass& ChowClass::operator-=(const ChowClass& o) {
    check_same_ambient(o);
    for (std::size_t k = 0; k < parts_.size(); ++k) parts_[k] -= o.parts_[k];
    return *this;
}

ChowClass operator-(const ChowClass& a) {
    ChowClass r(a.ambient_);
    for (std::size_t k = 0; k < a.parts_.size(); ++k) r.parts_[k] = -a.parts_[k];
    return r;
}

ChowClass operator*(const ChowClass& a, const ChowClass& b) {
    a.check_same_ambient(b);
    ChowClass r(a.ambient_);
    for (int i = 0; i <= a.ambient_; ++i) {
        if (a.parts_[static_cast<std::size_t>(i)].is_zero()) continue;
        for (int j = 0; i + j <= a.ambient_; ++j)
            r.parts_[static_cast<std::size_t>(i + j)] +=
                a.parts_[static_cast<std::size_t>(i)] * b.parts_[static_cast<std::size_t>(j)];
    }
    return r;
}

ChowClass operator*(const Rational& c, ChowClass a) {
    for (auto& v : a.parts_) v *= c;
    return a;
}

bool operator==(const ChowClass& a, const ChowClass& b) {
    return a.ambient_ == b.ambient_ && a.parts_ == b.parts_;
}

ChowClass pow(const ChowClass& a, long e) {
    if (e < 0) throw DomainError("negative chow exponent");
    ChowClass r = ChowClass::unit(a.ambient());
    ChowClass b = a;
    while (e > 0) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

ChowClass exp_nilpotent(const ChowClass& a) {
    if (!a.part(0).is_zero())
        throw DomainError("chow exp requires zero degree-0 part, got " + a.part(0).str());
    ChowClass r = ChowClass::unit(a.ambient());
    ChowClass term = ChowClass::unit(a.ambient());
    for (int m = 1; m <= a.ambient(); ++m) {
        term = term * a;
        if (term.is_zero()) break;
        r += Rational(Integer(1), factorial(m)) * term;
    }
    return r;
}

ChowClass inverse(const ChowClass& a) {
    if (a.part(0) != Rational(1))
        throw DomainError("chow inverse requires degree-0 part 1, got " + a.part(0).str());
    const int n = a.ambient();
    ChowClass r(n);
    r.set_part(0, Rational(1));
    for (int k = 1; k <= n; ++k) {
        Rational acc(0);
        for (int i = 1; i <= k; ++i) acc += a.part(i) * r.part(k - i);
        r.set_part(k, -acc);
    }
    return r;
}

std::string ChowClass::str() const {
    std::ostringstream os;
    bool first = true;
    for (int k = 0; k <= ambient_; ++k) {
        const Rational& c = parts_[static_cast<std::size_t>(k)];
        if (c.is_zero()) continue;
        if (!first) os << (c.sign() < 0 ? " - " : " + ");
        else if (c.sign() < 0) os << "-";
        first = false;
        Rational a = c.sign() < 0 ? -c : c;
        if (k == 0) os << a.str();
        else {
            if (a != Rational(1)) os << a.str() << "*";
            os << "H";
            if (k > 1) os << "^" << k;
        }
    }
    if (first) os << "0";
    return os.str();
}

}  // namespace hirz
