#pragma once

#include <string>
#include <vector>

#include "hirz/rational.hpp"

namespace hirz {

// Element of Q[x]/(x^{N+1}): an exact power series truncated at order N.
// Binary operations require both operands to carry the same order; use
// truncated() to move between orders explicitly.
class Series {
  public:
    explicit Series(int order);  // zero series
    Series(int order, std::vector<Rational> coeffs);

    static Series constant(int order, const Rational& c);
    static Series x(int order);  // the monomial x (zero when order = 0)

    int order() const { return order_; }
    const Rational& coeff(int k) const;
    void set_coeff(int k, const Rational& c);

    // Pads with zeros when raising the order, drops coefficients when lowering.
    Series truncated(int new_order) const;

    bool is_zero() const;
    std::string str() const;  // "1 + 1/2*x + 1/12*x^2" style, for diagnostics

    Series& operator+=(const Series& o);
    Series& operator-=(const Series& o);
    friend Series operator+(Series a, const Series& b) { return a += b; }
    friend Series operator-(Series a, const Series& b) { return a -= b; }
    friend Series operator-(const Series& a);
    friend Series operator*(const Series& a, const Series& b);
    friend Series operator*(const Rational& c, Series s);
    friend bool operator==(const Series& a, const Series& b);

  private:
    int order_;
    std::vector<Rational> c_;

    void check_same_order(const Series& o) const;
};

// Σ s^k / k!.  Requires constant term 0.
Series exp(const Series& s);

// Inverse of exp: requires constant term 1, returns a series with constant 0.
Series log(const Series& s);

// Multiplicative inverse; requires constant term 1.
Series inverse(const Series& s);

// x/(1 − e^{−x}) = 1 + x/2 + x²/12 − x⁴/720 + …, computed by inverting
// (1 − e^{−x})/x.
Series todd_series(int order);

Series pow(const Series& s, long e);  // e ≥ 0

}  // namespace hirz
