#include "hirz/rational.hpp"

#include <ostream>

namespace hirz {

Rational::Rational(const Integer& num, const Integer& den) {
    if (sgn(den) == 0) throw DomainError("rational with zero denominator");
    v_ = mpq_class(num);
    v_ /= mpq_class(den);  // mpq_class division canonicalizes
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw DomainError("division by zero");
    v_ /= o.v_;
    return *this;
}

Rational Rational::parse(std::string_view text) {
    auto bad = [&] {
        return DomainError("malformed rational '" + std::string(text) + "'");
    };
    if (text.empty()) throw bad();
    std::string s(text);
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            return Rational(Integer(s));
        }
        std::string p = s.substr(0, slash), q = s.substr(slash + 1);
        if (p.empty() || q.empty() || q.find('/') != std::string::npos) throw bad();
        return Rational(Integer(p), Integer(q));
    } catch (const std::invalid_argument&) {  // mpz_class rejects garbage this way
        throw bad();
    }
}

Integer Rational::as_integer() const {
    if (!is_integer()) throw DomainError("expected an integer, got " + str());
    return numerator();
}

std::string Rational::str() const {
    if (is_integer()) return numerator().get_str();
    return numerator().get_str() + "/" + denominator().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

Integer binomial(long n, long k) {
    if (k < 0 || k > n || n < 0) return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

Integer factorial(long n) {
    if (n < 0) throw DomainError("factorial of negative integer");
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

Rational pow(const Rational& base, long e) {
    if (e < 0) throw DomainError("negative exponent");
    Rational r(1), b = base;
    while (e > 0) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

}  // namespace hirz
