#pragma once

#include <string>
#include <vector>

#include "hirz/rational.hpp"
#include "hirz/series.hpp"

namespace hirz {

// Element of Q[H]/(H^{n+1}), the rational Chow ring of P^n.  parts[k] is the
// coefficient of H^k, i.e. the codimension-k piece.  Products of total
// codimension above n vanish.
class ChowClass {
  public:
    explicit ChowClass(int ambient);  // zero class
    ChowClass(int ambient, std::vector<Rational> parts);

    static ChowClass unit(int ambient);
    static ChowClass hyperplane(int ambient);  // H
    // Substitute x = H into a truncated series (truncating past H^n).
    static ChowClass from_series(int ambient, const Series& s);

    int ambient() const { return ambient_; }
    const Rational& part(int k) const;
    void set_part(int k, const Rational& c);

    // Coefficient of the point class H^n.
    Rational integral() const { return parts_.back(); }

    bool is_zero() const;
    std::string str() const;

    ChowClass& operator+=(const ChowClass& o);
    ChowClass& operator-=(const ChowClass& o);
    friend ChowClass operator+(ChowClass a, const ChowClass& b) { return a += b; }
    friend ChowClass operator-(ChowClass a, const ChowClass& b) { return a -= b; }
    friend ChowClass operator-(const ChowClass& a);
    friend ChowClass operator*(const ChowClass& a, const ChowClass& b);
    friend ChowClass operator*(const Rational& c, ChowClass a);
    friend bool operator==(const ChowClass& a, const ChowClass& b);

  private:
    int ambient_;
    std::vector<Rational> parts_;

    void check_same_ambient(const ChowClass& o) const;
};

ChowClass pow(const ChowClass& a, long e);  // e ≥ 0

// Σ a^m / m! — finite because a is nilpotent.  Requires zero degree-0 part.
ChowClass exp_nilpotent(const ChowClass& a);

// Multiplicative inverse; requires degree-0 part 1.
ChowClass inverse(const ChowClass& a);

}  // namespace hirz
