#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "hirz/rational.hpp"

namespace hirz {

// Sparse polynomial over Q in x0..x{m-1}.  Exponent vectors have fixed
// length m; no truncation, these are honest polynomials.
class Poly {
  public:
    explicit Poly(int num_vars);  // zero
    static Poly constant(int num_vars, const Rational& c);
    static Poly variable(int num_vars, int i);
    // Integer coefficients, +, -, *, ^ and parentheses; whitespace-free or
    // not.  Reports 1-based positions on failure.
    static Poly parse(int num_vars, std::string_view text);

    int num_vars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    // exponent vector -> coefficient, zero coefficients never stored
    const std::map<std::vector<int>, Rational>& terms() const { return terms_; }

    void add_term(const std::vector<int>& exps, const Rational& c);
    bool is_homogeneous() const;
    int degree() const;  // largest total degree; DomainError on zero

    std::string str() const;

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator-(const Poly& a);
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(const Rational& c, Poly a);
    friend bool operator==(const Poly& a, const Poly& b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }

  private:
    int nvars_;
    std::map<std::vector<int>, Rational> terms_;
};

Poly pow(const Poly& a, long e);  // e ≥ 0

// k[x0..x{m-1}] with every variable in degree 1.
class GradedRing {
  public:
    explicit GradedRing(int num_vars);
    int num_vars() const { return nvars_; }

  private:
    int nvars_;
};

// Nonempty list of nonzero homogeneous polynomials of positive degree; the
// degrees are read off the elements and cached.
class HomogeneousSequence {
  public:
    HomogeneousSequence(GradedRing ring, std::vector<Poly> elements);

    const GradedRing& ring() const { return ring_; }
    int num_vars() const { return ring_.num_vars(); }
    const std::vector<Poly>& elements() const { return elems_; }
    const std::vector<int>& degrees() const { return degrees_; }
    int size() const { return static_cast<int>(elems_.size()); }

  private:
    GradedRing ring_;
    std::vector<Poly> elems_;
    std::vector<int> degrees_;
};

// Homology and chain dimensions of the Koszul complex on a sequence of d
// elements, degree by internal degree: dims[k][t] = dim_Q H_k(s)_t and
// chain_dims[k][t] = dim_Q (wedge^k A^d)_t for 0 <= k <= d, 0 <= t <=
// max_degree.  Everything is certified only up to the degree horizon.
struct KoszulReport {
    int max_degree;
    std::vector<std::vector<long>> dims;
    std::vector<std::vector<long>> chain_dims;

    // Checks the rank-nullity invariant: alternating sums of chain and
    // homology dimensions agree in every degree.  Violation is a bug.
    KoszulReport(int max_degree, std::vector<std::vector<long>> dims,
                 std::vector<std::vector<long>> chain_dims);
};

KoszulReport koszul_homology(const HomogeneousSequence& seq, int max_degree);

// True iff H_k(s)_t = 0 for every k >= 1, t <= max_degree.  A bounded
// certificate, not a statement about all degrees.
bool is_regular_up_to(const HomogeneousSequence& seq, int max_degree);

// dim Tor_k(A/I, A/I)_t for 0 <= k <= d, t <= max_degree, via the Koszul
// resolution: after tensoring with A/I all differentials vanish, so Tor_k is
// a direct sum of degree-shifted copies of A/I.  Requires the regularity
// certificate up to max_degree.
std::vector<std::vector<long>> tor_dimensions(const HomogeneousSequence& seq, int max_degree);

// Verifies I·H_k(s) = 0 degree by degree: every product of a sequence element
// with a homology representative must be a boundary, checked by exact linear
// solves.  Representatives are taken in degrees t <= max_degree - max(d_i) so
// the products stay inside the computed window.
bool annihilation_check(const HomogeneousSequence& seq, int k, int max_degree);

// Recomputes both alternating sums of the report and compares them.
bool euler_identity_check(const HomogeneousSequence& seq, int max_degree);

}  // namespace hirz
