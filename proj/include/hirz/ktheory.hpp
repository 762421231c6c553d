#pragma once

#include <vector>

#include "hirz/chow.hpp"
#include "hirz/rational.hpp"

namespace hirz {

// Element of K_0(P^n) = Z[x]/(1-x)^{n+1}, stored reduced on the monomial
// basis 1, xi, ..., xi^n with xi = [O(1)].  Coefficients are integers: K_0 is
// a Z-algebra, rationality only enters through the Chern character.
class KClass {
  public:
    explicit KClass(int ambient);  // zero class
    KClass(int ambient, std::vector<Integer> coeffs);

    static KClass unit(int ambient);  // [O]

    int ambient() const { return ambient_; }
    const std::vector<Integer>& coeffs() const { return c_; }
    const Integer& coeff(int k) const { return c_.at(static_cast<std::size_t>(k)); }

    bool is_zero() const;
    std::string str() const;

    friend bool operator==(const KClass& a, const KClass& b) {
        return a.ambient_ == b.ambient_ && a.c_ == b.c_;
    }

  private:
    int ambient_;
    std::vector<Integer> c_;
};

// [O(d)] for any integer d; negative twists go through the inverse unit
// xi^{-1} = sum_{k<=n} (1-xi)^k.
KClass k_line(int ambient, const Integer& d);

KClass k_add(const KClass& a, const KClass& b);
KClass k_sub(const KClass& a, const KClass& b);
KClass k_neg(const KClass& a);
KClass k_mul(const KClass& a, const KClass& b);

// Reduce an arbitrary integer polynomial in xi (coefficient of xi^j at index
// j, any length) modulo (1-xi)^{n+1}.
KClass k_reduce(int ambient, std::vector<Integer> poly);

// Linear extension of chi(xi^d) = C(n+d, n): on the basis,
// sum coeffs[k] * C(n+k, n).
Integer euler_char(const KClass& a);

// Linear extension of xi^k -> exp(kH), truncated at H^n.
ChowClass ch_map(const KClass& a);

}  // namespace hirz
